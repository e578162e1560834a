#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "fatpoints/error.hpp"
#include "fatpoints/exactalg/random.hpp"

namespace fatpoints {

// GMP keeps mpq_class canonical after every operation: reduced, denominator > 0.
using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool same_field(const Rational&, const Rational&) { return true; }

inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw invalid_input("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw invalid_input("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

/// The field Q. random() draws small integers, which is how "general" points
/// are realized over the rationals.
class RationalField {
 public:
  using element_type = Rational;

  explicit RationalField(std::int64_t random_range = 60) : range_(random_range) {}

  std::uint64_t characteristic() const { return 0; }

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  Rational random(Rng& rng) const { return from_int(uniform_between(rng, -range_, range_)); }

  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }

 private:
  std::int64_t range_;
};

}  // namespace fatpoints
