#pragma once

#include <cassert>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fatpoints/error.hpp"

namespace fatpoints {

/// The class dL - m_1 E_1 - ... - m_n E_n on the blow-up of the plane,
/// stored as (d; m_1, ..., m_n).
struct DivisorClass {
  long d = 0;
  std::vector<long> e;

  static DivisorClass uniform(long d, std::size_t n, long m) { return {d, std::vector<long>(n, m)}; }

  std::size_t n() const { return e.size(); }

  DivisorClass operator+(const DivisorClass& o) const {
    check_same(o);
    DivisorClass r = *this;
    r.d += o.d;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  DivisorClass operator-(const DivisorClass& o) const { return *this + o * -1; }
  DivisorClass operator*(long k) const {
    DivisorClass r = *this;
    r.d *= k;
    for (auto& x : r.e) x *= k;
    return r;
  }

  std::string to_string() const {
    std::string s = "(" + std::to_string(d) + ";";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::string(" ") + std::to_string(e[i]);
    return s + ")";
  }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  void check_same(const DivisorClass& o) const {
    if (o.e.size() != e.size()) throw invalid_input("divisor classes on different blow-ups");
  }
};

/// Intersection form: L^2 = 1, E_i^2 = -1, the rest orthogonal.
inline long pair(const DivisorClass& a, const DivisorClass& b) {
  a.check_same(b);
  long r = a.d * b.d;
  for (std::size_t i = 0; i < a.e.size(); ++i) r -= a.e[i] * b.e[i];
  return r;
}

/// Answers s(t, n, m) for the points blown up.
using TorsionOracle = std::function<long(long t, long m)>;

struct BlowupModel {
  long n;
  DivisorClass cubic;
  TorsionOracle oracle;

  // C' = 3L - E_1 - ... - E_n
  static BlowupModel evenly_distributed(long n, TorsionOracle oracle = nullptr) {
    if (n < 1) throw invalid_input("blow-up needs at least one point");
    return {n, DivisorClass::uniform(3, static_cast<std::size_t>(n), 1), std::move(oracle)};
  }

  // C' = 3L - 2E_1 - E_2 - ... - E_n, E_1 over the singular point
  static BlowupModel singular_support(long n) {
    auto c = DivisorClass::uniform(3, static_cast<std::size_t>(n), 1);
    c.e.at(0) = 2;
    return {n, c, nullptr};
  }

  DivisorClass canonical() const { return DivisorClass::uniform(-3, static_cast<std::size_t>(n), -1); }

  long s(long t, long m) const {
    if (m == 0 || 3 * t > n * m) return 0;
    return oracle ? oracle(t, m) : 0;
  }
};

inline long chi(const BlowupModel& model, const DivisorClass& f) {
  const long twice = pair(f, f) - pair(model.canonical(), f);
  assert(twice % 2 == 0);
  return twice / 2 + 1;
}

struct Reduction {
  DivisorClass reduced;
  long r;
};

/// Subtract C' while F.C' < 0; h^0 is unchanged along the way.
inline Reduction anticanonical_reduce(const BlowupModel& model, const DivisorClass& f) {
  if (static_cast<long>(f.n()) != model.n) throw invalid_input("class does not live on this blow-up");
  for (long m : f.e)
    if (f.d < 3 * m) throw out_of_domain("anticanonical_reduce: t < 3m, no curves in the system");
  Reduction out{f, 0};
  while (pair(out.reduced, model.cubic) < 0) {
    out.reduced = out.reduced - model.cubic;
    ++out.r;
    if (out.reduced.d < 0) throw out_of_domain("anticanonical_reduce: class became empty");
  }
  return out;
}

/// dim I(mX)_t for n evenly distributed points, by reduction to a nef class
/// whose h^1 is s(t', n, m').
inline long h0_uniform(const BlowupModel& model, long t, long m) {
  if (t < 0 || m < 0) throw invalid_input("h0_uniform: negative argument");
  if (t < 3 * m) return 0;
  const auto red = anticanonical_reduce(model, DivisorClass::uniform(t, static_cast<std::size_t>(model.n), m));
  const long t2 = red.reduced.d, m2 = red.reduced.e.empty() ? 0 : red.reduced.e[0];
  return chi(model, red.reduced) + model.s(t2, m2);
}

inline long h_Z_from_h1(const DivisorClass& f, long h1) {
  long total = 0;
  for (long m : f.e) total += m * (m + 1) / 2;
  return total - h1;
}

}  // namespace fatpoints
