#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fatpoints/error.hpp"
#include "fatpoints/exactalg/matrix.hpp"
#include "fatpoints/exactalg/modp.hpp"
#include "fatpoints/exactalg/rational.hpp"

namespace fatpoints {

template <class E>
void require_single_field(const Matrix<E>& m) {
  const auto& e = m.entries();
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (!same_field(e[0], e[i])) throw invalid_input("matrix entries belong to different fields");
  }
}

/// Row echelon form by plain pivoted elimination. Pivot is the first nonzero
/// entry in column order; returns the pivot columns.
template <class E>
std::vector<std::size_t> echelonize(Matrix<E>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const E inv = E(1) / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      const E f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// ModP has no converting constructor from int, so the generic version above
// cannot spell E(1); this overload also avoids per-element modulus checks.
inline std::vector<std::size_t> echelonize(Matrix<ModP>& m) {
  require_single_field(m);
  if (m.rows() == 0 || m.cols() == 0) return {};
  const std::uint64_t q = m(0, 0).modulus();
  // f * x + y fits in 64 bits only for q < 2^31.
  const bool small = q < (1ULL << 31);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = m.entries()[i].value();

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[p * cols + j]);
    const std::uint64_t inv = detail::powmod(a[r * cols + c], q - 2, q);
    const std::uint64_t* pivot_row = &a[r * cols];
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t* row = &a[i * cols];
      if (row[c] == 0) continue;
      const std::uint64_t f = q - detail::mulmod(row[c], inv, q);
      if (small) {
        for (std::size_t j = c; j < cols; ++j) row[j] = (row[j] + f * pivot_row[j]) % q;
      } else {
        for (std::size_t j = c; j < cols; ++j) row[j] = (row[j] + detail::mulmod(f, pivot_row[j], q)) % q;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < a.size(); ++i) m(i / cols, i % cols) = ModP(a[i], static_cast<std::uint32_t>(q));
  return pivots;
}

template <class E>
std::size_t gauss_rank(Matrix<E> m) {
  require_single_field(m);
  return echelonize(m).size();
}

/// Fraction-free (Bareiss) rank over Q. Rows are first scaled to integers;
/// every intermediate entry is then a minor of the scaled matrix, so each
/// division is exact and entries stay integral.
inline std::size_t bareiss_rank(const Matrix<Rational>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).get_num() * (den / m(i, j).get_den());
  }

  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p * cols + c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) swap(a[r * cols + j], a[p * cols + j]);
    const mpz_class& piv = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      mpz_class lead = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = piv * a[i * cols + j] - lead * a[r * cols + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * cols + j] = std::move(v);
      }
      a[i * cols + c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

inline std::size_t rank(const Matrix<Rational>& m) { return bareiss_rank(m); }
inline std::size_t rank(const Matrix<ModP>& m) { return gauss_rank(m); }

/// Basis of the right kernel {v : m v = 0}, one vector per free column, with
/// that free coordinate set to one. Needs the field's zero and one.
template <class E>
std::vector<std::vector<E>> kernel_basis(Matrix<E> m, const E& zero, const E& one) {
  require_single_field(m);
  const auto pivots = echelonize(m);
  const std::size_t rank = pivots.size();

  // Back-substitute to reduced form on the pivot rows.
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t c = pivots[k];
    const E inv = one / m(k, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (is_zero(m(i, c))) continue;
      const E f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(k, j);
    }
  }

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<E>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<E> v(m.cols(), zero);
    v[f] = one;
    for (std::size_t k = 0; k < rank; ++k) v[pivots[k]] = -m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fatpoints
