#pragma once

#include <algorithm>
#include <vector>

#include "fatpoints/error.hpp"
#include "fatpoints/geometry/hvector.hpp"

namespace fatpoints {

/// When dh(t) = dh(t+1) = d, a curve of degree d splits X into W1 (on the
/// curve) and W2 (the residual).
struct DavisSplit {
  long d;
  HVector w1;
  HVector w2;
};

inline DavisSplit davis_split(const HVector& dh, long t) {
  if (dh.kind != HVector::Kind::difference) throw invalid_input("davis_split: expects a difference function");
  if (t < 0) throw invalid_input("davis_split: negative degree");
  const long d = dh[static_cast<std::size_t>(t)];
  if (d < 1 || dh[static_cast<std::size_t>(t + 1)] != d)
    throw out_of_domain("davis_split: no maximal growth at degree " + std::to_string(t));
  std::vector<long> w1, w2;
  for (std::size_t s = 0; s < dh.size(); ++s) {
    w1.push_back(std::min(dh[s], d));
    w2.push_back(std::max(dh[s + static_cast<std::size_t>(d)] - d, 0L));
  }
  return {d, HVector::difference(std::move(w1)), HVector::difference(std::move(w2))};
}

// Regularity of I_2X is at most twice that of I_X.
inline long regularity_bound(long reg_x) {
  if (reg_x < 1) throw invalid_input("regularity_bound: regularity is at least 1");
  return 2 * reg_x;
}

}  // namespace fatpoints
