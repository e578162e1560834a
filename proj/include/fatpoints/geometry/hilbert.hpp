#pragma once

#include <cstddef>
#include <vector>

#include "fatpoints/error.hpp"
#include "fatpoints/exactalg/elimination.hpp"
#include "fatpoints/exactalg/matrix.hpp"
#include "fatpoints/geometry/form.hpp"
#include "fatpoints/geometry/hvector.hpp"
#include "fatpoints/geometry/scheme.hpp"

namespace fatpoints {

namespace detail {

template <class Field>
void require_characteristic(const Field& k, long bound) {
  const auto ch = k.characteristic();
  if (ch != 0 && ch <= static_cast<std::uint64_t>(bound)) {
    throw invalid_input("field characteristic must exceed every degree and multiplicity used");
  }
}

}  // namespace detail

/// Interpolation conditions of Z in degree t. Columns are the degree-t
/// monomials in graded-lex order; point p of multiplicity m contributes
/// C(m+1, 2) rows, the values at p of all partial derivatives of order < m
/// taken in the two affine coordinates of p's chart. The kernel is I(Z)_t.
template <class Field>
Matrix<typename Field::element_type> conditions_matrix(const FatPointScheme<Field>& z, int t) {
  using E = typename Field::element_type;
  if (t < 0) throw invalid_input("conditions_matrix: negative degree");
  const Field& k = z.field();
  int max_mult = 0;
  for (int m : z.multiplicities()) max_mult = std::max(max_mult, m);
  detail::require_characteristic(k, std::max(t, max_mult));

  const auto mons = monomials(t);
  Matrix<E> out(static_cast<std::size_t>(z.degree()), mons.size(), k.zero());

  // falling[a][i] = a (a-1) ... (a-i+1)
  std::vector<std::vector<E>> falling(t + 1);
  for (int a = 0; a <= t; ++a) {
    falling[a].assign(t + 2, k.zero());
    falling[a][0] = k.one();
    for (int i = 1; i <= a; ++i) falling[a][i] = falling[a][i - 1] * k.from_int(a - i + 1);
  }

  std::size_t row = 0;
  for (std::size_t pi = 0; pi < z.size(); ++pi) {
    const auto& p = z.points()[pi];
    const int m = z.multiplicities()[pi];
    const int chart = p.chart();
    int u = -1, v = -1;
    for (int var = 0; var < 3; ++var) {
      if (var == chart) continue;
      (u < 0 ? u : v) = var;
    }
    std::vector<E> pu(t + 1, k.one()), pv(t + 1, k.one());
    for (int e = 1; e <= t; ++e) {
      pu[e] = pu[e - 1] * p[u];
      pv[e] = pv[e - 1] * p[v];
    }
    for (int order = 0; order < m; ++order) {
      for (int i = order; i >= 0; --i) {
        const int j = order - i;
        for (std::size_t c = 0; c < mons.size(); ++c) {
          const int au = mons[c][u], av = mons[c][v];
          if (au < i || av < j) continue;
          out(row, c) = falling[au][i] * falling[av][j] * pu[au - i] * pv[av - j];
        }
        ++row;
      }
    }
  }
  return out;
}

/// dim I(Z)_t
template <class Field>
long ideal_dim(const FatPointScheme<Field>& z, int t) {
  if (t < 0) throw invalid_input("ideal_dim: negative degree");
  if (z.empty()) return static_cast<long>(monomial_count(t));
  return static_cast<long>(monomial_count(t)) - static_cast<long>(rank(conditions_matrix(z, t)));
}

/// Basis of I(Z)_t as forms.
template <class Field>
std::vector<Form<Field>> ideal_basis(const FatPointScheme<Field>& z, int t) {
  const Field& k = z.field();
  std::vector<Form<Field>> out;
  if (z.empty()) {
    for (std::size_t i = 0; i < monomial_count(t); ++i) {
      std::vector<typename Field::element_type> c(monomial_count(t), k.zero());
      c[i] = k.one();
      out.emplace_back(k, t, std::move(c));
    }
    return out;
  }
  for (auto& v : kernel_basis(conditions_matrix(z, t), k.zero(), k.one())) out.emplace_back(k, t, std::move(v));
  return out;
}

/// h_Z(0..tmax)
template <class Field>
HVector hilbert_function(const FatPointScheme<Field>& z, int tmax) {
  if (tmax < 0) throw invalid_input("hilbert_function: negative degree");
  std::vector<long> h;
  for (int t = 0; t <= tmax; ++t) h.push_back(static_cast<long>(monomial_count(t)) - ideal_dim(z, t));
  return HVector::hilbert(std::move(h));
}

/// h_Z computed until it equals deg Z in two consecutive degrees.
template <class Field>
HVector hilbert_function(const FatPointScheme<Field>& z) {
  const long deg = z.degree();
  std::vector<long> h;
  // h increases strictly until it reaches deg Z, so deg Z + 1 terms suffice.
  for (int t = 0; t <= deg + 1; ++t) {
    h.push_back(static_cast<long>(monomial_count(t)) - ideal_dim(z, t));
    if (h.size() >= 2 && h[h.size() - 1] == deg && h[h.size() - 2] == deg) break;
    if (deg == 0) {
      h.push_back(0);
      break;
    }
  }
  return HVector::hilbert(std::move(h));
}

template <class Field>
HVector difference_function(const FatPointScheme<Field>& z) {
  return difference_function(hilbert_function(z));
}

/// 1 + the last degree where the difference function is nonzero.
template <class Field>
int regularity(const FatPointScheme<Field>& z) {
  return static_cast<int>(difference_function(z).size());
}

}  // namespace fatpoints
