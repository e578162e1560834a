#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fatpoints/error.hpp"
#include "fatpoints/formulas/prediction.hpp"

namespace fatpoints {

namespace detail {

// 1 2 3 4 5 6 in degrees 0..5, then `tail` from degree 6 on.
inline HVector staircase(std::vector<long> tail) {
  std::vector<long> v{1, 2, 3, 4, 5, 6};
  v.insert(v.end(), tail.begin(), tail.end());
  return HVector::difference(std::move(v));
}

// set v[lo..hi] = value, growing v as needed
inline void fill(std::vector<long>& v, long lo, long hi, long value) {
  if (hi >= static_cast<long>(v.size())) v.resize(static_cast<std::size_t>(hi + 1), 0);
  for (long d = lo; d <= hi; ++d) v[static_cast<std::size_t>(d)] = value;
}

inline std::vector<long> ramp() { return {1, 2, 3, 4, 5, 6}; }

}  // namespace detail

/// Reduced complete intersection of a cubic and a curve of degree t:
/// 1 2 3 ... 3 2 1 with the 2 in degree t.
inline HVector predict_ci_reduced(long t) {
  if (t < 3) throw out_of_domain("complete intersection: t must be at least 3");
  std::vector<long> v{1, 2};
  detail::fill(v, 2, t - 1, 3);
  detail::fill(v, t, t, 2);
  detail::fill(v, t + 1, t + 1, 1);
  return HVector::difference(std::move(v));
}

/// 2X for X the complete intersection of a cubic and a curve of degree t.
inline Prediction predict_ci(long t) {
  if (t < 3) throw out_of_domain("complete intersection: t must be at least 3");
  Prediction p{{}, "complete intersection, t = " + std::to_string(t), ""};
  if (t == 3) {
    p.dh = detail::staircase({4, 2});
  } else if (t == 4) {
    p.dh = detail::staircase({6, 5, 3, 1});
  } else {
    auto v = detail::ramp();
    detail::fill(v, 6, t + 2, 6);
    detail::fill(v, t + 3, t + 3, 5);
    detail::fill(v, t + 4, t + 4, 4);
    detail::fill(v, t + 5, 2 * t - 1, 3);
    detail::fill(v, 2 * t, 2 * t, 2);
    detail::fill(v, 2 * t + 1, 2 * t + 1, 1);
    p.dh = HVector::difference(std::move(v));
  }
  return p;
}

/// Reduced n = 3t + delta points on a cubic, not a complete intersection:
/// 1 2 3 ... 3 delta with the last 3 in degree t.
inline HVector predict_on_cubic_reduced(long n) {
  if (n < 3) throw out_of_domain("points on a cubic: n must be at least 3");
  const long t = n / 3, delta = n % 3;
  std::vector<long> v{1, 2};
  detail::fill(v, 2, t, 3);
  detail::fill(v, t + 1, t + 1, delta);
  if (t == 0) v = {1, 2};
  return HVector::difference(std::move(v));
}

/// 2X for n = 3t + delta points on a cubic, the singular point (if any) not in X.
/// branch: "a" (delta 1 or 2), "b-i" or "b-ii" (delta 0).
inline Prediction predict_smooth_cubic(long n, const std::string& branch) {
  const long t = n / 3, delta = n % 3;
  if (n < 0 || t <= 5 - delta) throw out_of_domain("smooth cubic: need n = 3t + delta with t > 5 - delta");
  const bool want_a = delta != 0;
  if (want_a ? branch != "a" : (branch != "b-i" && branch != "b-ii"))
    throw invalid_input(std::string("smooth cubic: n = ") + std::to_string(n) + " needs branch " + (want_a ? "a" : "b-i or b-ii"));
  auto v = detail::ramp();
  detail::fill(v, 6, t + 3, 6);
  detail::fill(v, t + 4, t + 4, 3 + delta);
  detail::fill(v, t + 5, 2 * t + delta - 1, 3);
  if (want_a) {
    detail::fill(v, 2 * t + delta, 2 * t + delta, 3 - delta);
  } else if (branch == "b-i") {
    detail::fill(v, 2 * t, 2 * t, 3);
  } else {
    detail::fill(v, 2 * t, 2 * t, 2);
    detail::fill(v, 2 * t + 1, 2 * t + 1, 1);
  }
  return {HVector::difference(std::move(v)), "points on a cubic, n = " + std::to_string(n), branch};
}

/// 2X for n = 3t + delta points on an irreducible singular cubic, the
/// singular point in X. branch: "d0", "d1-first", "d1-second", "d2".
inline Prediction predict_singular_cubic(long n, const std::string& branch) {
  const long t = n / 3, delta = n % 3;
  if (n < 0 || t <= 3) throw out_of_domain("singular cubic: need n = 3t + delta with t > 3");
  const std::string expected = delta == 0 ? "d0" : delta == 2 ? "d2" : "";
  if (delta == 1 ? (branch != "d1-first" && branch != "d1-second") : branch != expected)
    throw invalid_input("singular cubic: n = " + std::to_string(n) + " needs branch " +
                        (delta == 1 ? std::string("d1-first or d1-second") : expected));
  auto v = detail::ramp();
  if (branch == "d0") {
    detail::fill(v, 6, t + 2, 6);
    detail::fill(v, t + 3, t + 3, 5);
    detail::fill(v, t + 4, 2 * t, 3);
    detail::fill(v, 2 * t + 1, 2 * t + 1, 1);
  } else if (branch == "d1-first") {
    detail::fill(v, 6, t + 3, 6);
    detail::fill(v, t + 4, 2 * t + 1, 3);
  } else if (branch == "d1-second") {
    detail::fill(v, 6, t + 2, 6);
    detail::fill(v, t + 3, t + 3, 5);
    detail::fill(v, t + 4, t + 4, 4);
    detail::fill(v, t + 5, 2 * t + 1, 3);
  } else {
    detail::fill(v, 6, t + 3, 6);
    detail::fill(v, t + 4, t + 4, 4);
    detail::fill(v, t + 5, 2 * t + 1, 3);
    detail::fill(v, 2 * t + 2, 2 * t + 2, 2);
  }
  return {HVector::difference(std::move(v)), "singular cubic, singular point in X, n = " + std::to_string(n), branch};
}

/// s(t, n, m) supplied by the caller; m = 0 always gives 0.
using SFunction = std::function<long(long t, long n, long m)>;

inline SFunction constant_s(long value) {
  return [value](long t, long n, long m) -> long {
    if (m == 0 || 3 * t > n * m) return 0;
    return value;
  };
}

/// h_Z(t) for Z = mX, X n >= 9 evenly distributed smooth points on a reduced cubic.
inline long uniform_hilbert_value(long n, long m, long t, const SFunction& s) {
  if (n < 9) throw out_of_domain("uniform: n must be at least 9");
  if (m < 1 || t < 0) throw invalid_input("uniform: need m >= 1 and t >= 0");
  if (t < 3 * m) return forms_dim(t);
  if (3 * t >= n * m) return n * choose2(m + 1) - s(t, n, m);
  // n > 9 here, since n = 9 and t >= 3m means 3t >= nm
  const long r = (m * n - 3 * t + (n - 9) - 1) / (n - 9);
  return forms_dim(t) - forms_dim(t - 3 * r) + n * choose2(m - r + 1) - s(t - 3 * r, n, m - r);
}

inline Prediction predict_uniform(long n, long m, const SFunction& s) {
  if (n < 9) throw out_of_domain("uniform: n must be at least 9");
  if (m < 1) throw invalid_input("uniform: m must be at least 1");
  // past nm/3 the value is constant
  const long last = (n * m) / 3 + 2;
  std::vector<long> h;
  for (long t = 0; t <= last; ++t) h.push_back(uniform_hilbert_value(n, m, t, s));
  return {differences(h), "evenly distributed points, n = " + std::to_string(n) + ", m = " + std::to_string(m), ""};
}

/// h^0 of tL - m(E_1 + ... + E_n), p_1 the singular point of an irreducible
/// cubic, m in {1, 2}. `s` answers s(t - 3, n - 1, 1) in the third range for m = 2.
inline long singular_support_h0(long n, long m, long t, const SFunction& s = constant_s(0)) {
  if (n < 9) throw out_of_domain("singular support: n must be at least 9");
  if (t < 0) throw invalid_input("singular support: negative degree");
  if (m == 1) {
    if (t < 3) return 0;
    if (3 * t < n + 1) return choose2(t - 1);
    return forms_dim(t) - n;
  }
  if (m == 2) {
    if (t < 6) return 0;
    if (3 * t < n + 8) return choose2(t - 4);
    if (3 * t < 2 * (n + 1)) {
      const long extra = n - 1 >= 9 ? s(t - 3, n - 1, 1) : 0;
      return forms_dim(t - 3) - (n - 1) + extra;
    }
    return forms_dim(t) - 3 * n;
  }
  throw invalid_input("singular support: m must be 1 or 2");
}

/// Values of h^0 in degrees 0..tmax.
inline std::vector<long> predict_singular_support(long n, long m, long tmax, const SFunction& s = constant_s(0)) {
  std::vector<long> out;
  for (long t = 0; t <= tmax; ++t) out.push_back(singular_support_h0(n, m, t, s));
  return out;
}

}  // namespace fatpoints
