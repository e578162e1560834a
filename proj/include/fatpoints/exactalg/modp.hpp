#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "fatpoints/error.hpp"
#include "fatpoints/exactalg/random.hpp"

namespace fatpoints {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  a %= q;
  while (e) {
    if (e & 1) r = mulmod(r, a, q);
    a = mulmod(a, a, q);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin; these bases are exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Random prime in [2^30, 2^31).
inline std::uint32_t random_prime(Rng& rng) {
  for (;;) {
    auto c = static_cast<std::uint32_t>((1ULL << 30) + uniform_below(rng, 1ULL << 30)) | 1U;
    if (is_prime(c)) return c;
  }
}

/// Residue modulo a prime q < 2^32. Every element carries its modulus so that
/// arithmetic between different fields is caught instead of silently wrong.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t value, std::uint32_t q) : v_(static_cast<std::uint32_t>(value % q)), q_(q) {}

  static ModP from_int(std::int64_t value, std::uint32_t q) {
    std::int64_t r = value % static_cast<std::int64_t>(q);
    if (r < 0) r += q;
    return ModP(static_cast<std::uint64_t>(r), q);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return q_; }
  bool is_zero() const { return v_ == 0; }

  ModP inverse() const {
    if (v_ == 0) throw invalid_input("ModP: inverse of zero");
    return ModP(detail::powmod(v_, q_ - 2, q_), q_);
  }

  ModP pow(std::uint64_t e) const { return ModP(detail::powmod(v_, e, q_), q_); }

  ModP operator-() const { return ModP(v_ == 0 ? 0 : q_ - v_, q_); }

  ModP& operator+=(const ModP& o) {
    check(o);
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s >= q_ ? s - q_ : s);
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + q_ - o.v_);
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    check(o);
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % q_);
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_ && a.q_ == b.q_; }
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const ModP& a) { return os << a.v_; }

 private:
  void check(const ModP& o) const {
    if (q_ != o.q_) {
      throw invalid_input("ModP: mixed moduli " + std::to_string(q_) + " and " + std::to_string(o.q_));
    }
  }

  std::uint32_t v_ = 0;
  std::uint32_t q_ = 2;
};

inline bool is_zero(const ModP& a) { return a.is_zero(); }
inline bool same_field(const ModP& a, const ModP& b) { return a.modulus() == b.modulus(); }

/// The prime field F_q as a value: the factory for its elements.
class PrimeField {
 public:
  using element_type = ModP;

  explicit PrimeField(std::uint32_t q) : q_(q) {
    if (q <= 3 || q >= (1U << 31) || !is_prime(q)) {
      throw invalid_input("PrimeField: modulus must be a prime in (3, 2^31)");
    }
  }

  std::uint32_t modulus() const { return q_; }
  std::uint64_t characteristic() const { return q_; }

  ModP zero() const { return ModP(0, q_); }
  ModP one() const { return ModP(1, q_); }
  ModP from_int(std::int64_t v) const { return ModP::from_int(v, q_); }
  ModP random(Rng& rng) const { return ModP(uniform_below(rng, q_), q_); }

  std::string name() const { return "F_" + std::to_string(q_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q_ == b.q_; }

 private:
  std::uint32_t q_;
};

}  // namespace fatpoints
