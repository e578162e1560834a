#pragma once

#include <gmpxx.h>

#include "fatpoints/error.hpp"
#include "fatpoints/exactalg/modp.hpp"
#include "fatpoints/exactalg/rational.hpp"

namespace fatpoints {

// Image of a rational number in the field.
inline Rational embed(const RationalField&, const Rational& r) { return r; }

inline ModP embed(const PrimeField& k, const Rational& r) {
  const mpz_class q = k.modulus();
  mpz_class num = r.get_num() % q, den = r.get_den() % q;
  if (num < 0) num += q;
  if (den == 0) throw invalid_input("denominator vanishes modulo " + std::to_string(k.modulus()));
  return ModP(num.get_ui(), k.modulus()) / ModP(den.get_ui(), k.modulus());
}

}  // namespace fatpoints
