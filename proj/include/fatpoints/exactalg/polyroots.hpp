#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "fatpoints/exactalg/modp.hpp"
#include "fatpoints/exactalg/random.hpp"

// Root finding for small univariate polynomials over F_q (q an odd prime).
// Used to locate torsion points and to place random points on conics and
// cubics.
namespace fatpoints::polyroots {

using Poly = std::vector<std::uint64_t>;  // low degree first

namespace detail {

using fatpoints::detail::mulmod;
using fatpoints::detail::powmod;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t q) { return powmod(a, q - 2, q); }

inline Poly make_monic(Poly p, std::uint64_t q) {
  trim(p);
  if (p.empty()) return p;
  const std::uint64_t li = inv(p.back(), q);
  for (auto& c : p) c = mulmod(c, li, q);
  return p;
}

inline Poly rem(Poly a, const Poly& b, std::uint64_t q) {
  trim(a);
  const std::uint64_t li = inv(b.back(), q);
  while (a.size() >= b.size()) {
    const std::uint64_t f = mulmod(a.back(), li, q);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + q - mulmod(f, b[i], q)) % q;
    trim(a);
  }
  return a;
}

inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], q)) % q;
  return rem(std::move(r), f, q);
}

inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t q) {
  Poly r{1};
  base = rem(std::move(base), f, q);
  while (e) {
    if (e & 1) r = mul_mod(r, base, f, q);
    base = mul_mod(base, base, f, q);
    e >>= 1;
  }
  return r;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), q);
}

inline Poly sub_x(Poly p, std::uint64_t q) {  // p - x
  if (p.size() < 2) p.resize(2, 0);
  p[1] = (p[1] + q - 1) % q;
  trim(p);
  return p;
}

inline void split(const Poly& g, std::uint64_t q, Rng& rng, std::vector<std::uint64_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back((q - g[0]) % q);  // monic linear
    return;
  }
  for (;;) {
    const std::uint64_t a = uniform_below(rng, q);
    Poly h = pow_mod(Poly{a, 1}, (q - 1) / 2, g, q);
    if (h.empty()) h = {0};
    h[0] = (h[0] + q - 1) % q;
    Poly d = gcd(g, h, q);
    if (d.size() > 1 && d.size() < g.size()) {
      split(d, q, rng, out);
      // g / d by remainder-free long division
      Poly quo(g.size() - d.size() + 1, 0), r = g;
      for (std::size_t k = quo.size(); k-- > 0;) {
        quo[k] = r[k + d.size() - 1];
        for (std::size_t i = 0; i < d.size(); ++i) r[k + i] = (r[k + i] + q - mulmod(quo[k], d[i], q)) % q;
      }
      split(quo, q, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Distinct roots in F_q of the polynomial with the given coefficients, sorted.
inline std::vector<std::uint64_t> roots(Poly f, std::uint64_t q, Rng& rng) {
  f = detail::make_monic(std::move(f), q);
  if (f.size() <= 1) return {};
  // Roots in F_q are exactly the roots of gcd(x^q - x, f).
  Poly xq = detail::pow_mod(Poly{0, 1}, q, f, q);
  Poly g = detail::gcd(f, detail::sub_x(xq, q), q);
  std::vector<std::uint64_t> out;
  detail::split(g, q, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// A square root of a modulo q (Tonelli-Shanks), or nothing for non-residues.
inline std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t q) {
  using fatpoints::detail::mulmod;
  using fatpoints::detail::powmod;
  a %= q;
  if (a == 0) return 0;
  if (powmod(a, (q - 1) / 2, q) != 1) return std::nullopt;
  std::uint64_t s = 0, d = q - 1;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (q - 1) / 2, q) != q - 1) ++z;
  std::uint64_t m = s, c = powmod(z, d, q), t = powmod(a, d, q), r = powmod(a, (d + 1) / 2, q);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, q);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t k = 0; k + 1 < m - i; ++k) b = mulmod(b, b, q);
    m = i;
    c = mulmod(b, b, q);
    t = mulmod(t, c, q);
    r = mulmod(r, b, q);
  }
  return r;
}

}  // namespace fatpoints::polyroots
