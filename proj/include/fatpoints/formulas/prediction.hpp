#pragma once

#include <string>

#include "fatpoints/geometry/hvector.hpp"

namespace fatpoints {

/// A predicted difference function together with where it comes from.
struct Prediction {
  HVector dh;
  std::string source;
  std::string branch;
  bool is_max = false;
  bool is_min = false;
};

inline long choose2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// C(t+2, 2): dimension of the forms of degree t, zero for t < 0
inline long forms_dim(long t) { return t < 0 ? 0 : choose2(t + 2); }

// Difference of a Hilbert function given on 0..T with h(T-1) = h(T).
inline HVector differences(const std::vector<long>& h) {
  std::vector<long> d(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) d[i] = h[i] - (i ? h[i - 1] : 0);
  return HVector::difference(std::move(d));
}

}  // namespace fatpoints
