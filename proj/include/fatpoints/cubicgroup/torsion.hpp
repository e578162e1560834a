#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "fatpoints/cubicgroup/curve.hpp"
#include "fatpoints/error.hpp"
#include "fatpoints/exactalg/modp.hpp"
#include "fatpoints/exactalg/polyroots.hpp"
#include "fatpoints/exactalg/random.hpp"

namespace fatpoints {

namespace detail {

template <class E>
constexpr bool is_modp = std::is_same_v<E, ModP>;

inline std::optional<ModP> sqrt_in(const ModP& a) {
  auto r = polyroots::sqrt_mod(a.value(), a.modulus());
  if (!r) return std::nullopt;
  return ModP(*r, a.modulus());
}

}  // namespace detail

/// Uniform-ish random non-identity element. Weierstrass curves need a prime
/// field (square roots); the nodal and cuspidal groups work over any field.
template <class Field>
GroupElement<typename Field::element_type> random_element(const CubicCurve<Field>& c, Rng& rng) {
  using E = typename Field::element_type;
  const Field& k = c.field();
  switch (c.kind()) {
    case CubicKind::nodal:
      for (;;) {
        E u = k.random(rng);
        if (!is_zero(u) && !(u == k.one())) return {u, k.zero(), false};
      }
    case CubicKind::cuspidal:
      for (;;) {
        E u = k.random(rng);
        if (!is_zero(u)) return {u, k.zero(), false};
      }
    case CubicKind::weierstrass:
      if constexpr (detail::is_modp<E>) {
        for (int tries = 0; tries < 1000; ++tries) {
          const E x = k.random(rng);
          const auto y = detail::sqrt_in(x * x * x + c.a() * x + c.b());
          if (!y) continue;
          return {x, uniform_below(rng, 2) ? *y : -*y, false};
        }
        throw generation_failure("no random point found on " + c.describe());
      } else {
        throw generation_failure("random Weierstrass points need a prime field");
      }
    default:
      throw invalid_input("reducible cubic: no group law");
  }
}

/// An element of exact order lambda, if one can be produced.
template <class Field>
std::optional<GroupElement<typename Field::element_type>> torsion_point(const CubicCurve<Field>& c, long lambda, Rng& rng) {
  using E = typename Field::element_type;
  if (lambda < 1) throw invalid_input("torsion_point: order must be positive");
  if (lambda == 1) return c.identity();
  const Field& k = c.field();
  auto exact = [&](const GroupElement<E>& g) { return c.order(g, lambda) == std::optional<long>(lambda); };
  switch (c.kind()) {
    case CubicKind::cuspidal:
      return std::nullopt;  // additive group, no torsion below the characteristic
    case CubicKind::nodal:
      if constexpr (detail::is_modp<E>) {
        const std::uint64_t q = k.modulus();
        if ((q - 1) % static_cast<std::uint64_t>(lambda) != 0) return std::nullopt;
        for (int tries = 0; tries < 200; ++tries) {
          const E g = k.random(rng);
          if (is_zero(g)) continue;
          GroupElement<E> cand{g.pow((q - 1) / static_cast<std::uint64_t>(lambda)), k.zero(), false};
          if (exact(cand)) return cand;
        }
        return std::nullopt;
      } else {
        if (lambda == 2) return GroupElement<E>{-k.one(), k.zero(), false};
        return std::nullopt;
      }
    case CubicKind::weierstrass: {
      if constexpr (detail::is_modp<E>) {
        const std::uint64_t q = k.modulus();
        auto val = [](const E& e) { return static_cast<std::uint64_t>(e.value()); };
        if (lambda == 2) {
          const auto xs = polyroots::roots({val(c.b()), val(c.a()), 0, 1}, q, rng);
          if (xs.empty()) return std::nullopt;
          return GroupElement<E>{E(xs[0], q), k.zero(), false};
        }
        if (lambda == 3) {
          // 3-division polynomial 3x^4 + 6a x^2 + 12b x - a^2
          const E a = c.a(), b = c.b();
          const polyroots::Poly psi{val(-(a * a)), val(k.from_int(12) * b), val(k.from_int(6) * a), 0, 3};
          for (auto x0 : polyroots::roots(psi, q, rng)) {
            const E x(x0, q);
            if (auto y = detail::sqrt_in(x * x * x + a * x + b)) {
              GroupElement<E> cand{x, *y, false};
              if (exact(cand)) return cand;
            }
          }
        }
      }
      return std::nullopt;
    }
    default:
      throw invalid_input("reducible cubic: no group law");
  }
}

/// n distinct smooth points whose group sum is `target`.
template <class Field>
std::vector<CurvePoint<typename Field::element_type>> points_with_sum(const CubicCurve<Field>& c, std::size_t n,
                                                                      const GroupElement<typename Field::element_type>& target,
                                                                      Rng& rng, int retries = 20) {
  using E = typename Field::element_type;
  if (n < 1) throw invalid_input("points_with_sum: n must be positive");
  c.check(target);
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<GroupElement<E>> els;
    GroupElement<E> acc = c.identity();
    bool ok = true;
    while (els.size() + 1 < n && ok) {
      const auto g = random_element(c, rng);
      bool dup = false;
      for (const auto& e : els) dup = dup || e == g;
      if (dup) continue;
      els.push_back(g);
      acc = c.add(acc, g);
    }
    const auto last = c.add(target, c.neg(acc));
    for (const auto& e : els) ok = ok && !(e == last);
    if (!ok) continue;
    els.push_back(last);
    std::vector<CurvePoint<E>> out;
    for (const auto& e : els) out.push_back({c.point_of(e), true});
    return out;
  }
  throw generation_failure("points_with_sum: could not find " + std::to_string(n) + " distinct points");
}

/// The torsion correction s(t, n, m) for n smooth points on c.
///   3t > nm:           0
///   n = 9, t = 3m:     floor(m / lambda), lambda the order of -(p1 + ... + p9)
///   n > 9, 3t = nm:    1 if m (p1 + ... + pn) = 0, else 0
template <class Field>
long s_value(const CubicCurve<Field>& c, const std::vector<ProjPoint<typename Field::element_type>>& pts, long t, long m) {
  const long n = static_cast<long>(pts.size());
  if (n < 9) throw invalid_input("s_value: needs at least 9 points");
  if (m < 0 || t < 0) throw invalid_input("s_value: negative argument");
  if (m == 0) return 0;
  if (3 * t > n * m) return 0;
  if (3 * t < n * m) throw out_of_domain("s_value: undefined for 3t < nm");
  const auto sum = c.sum(pts);
  if (n == 9) {
    // lambda > m contributes nothing, so a bounded search is exact here
    const auto lambda = c.order(c.neg(sum), m);
    return lambda ? m / *lambda : 0;
  }
  return c.multiply(sum, m) == c.identity() ? 1 : 0;
}

}  // namespace fatpoints
