#pragma once

#include "fatpoints/configs/cubic_configs.hpp"
#include "fatpoints/configs/generated.hpp"
#include "fatpoints/configs/nine_cases.hpp"
