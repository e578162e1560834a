#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/error.hpp"
#include "fatpoints/exactalg/random.hpp"
#include "fatpoints/formulas/cubic_formulas.hpp"
#include "fatpoints/geometry/form.hpp"
#include "fatpoints/geometry/hilbert.hpp"
#include "fatpoints/geometry/scheme.hpp"

namespace fatpoints {

/// A generated point configuration. `scheme` is the reduced support X;
/// `expected` (when known) is the difference function of
/// scheme.with_multiplicity(multiplicity).
template <class Field>
struct GeneratedConfig {
  std::string name;
  FatPointScheme<Field> scheme;
  int multiplicity = 2;
  std::vector<Form<Field>> curves;
  std::optional<HVector> expected;
  std::optional<HVector> expected_reduced;
  SFunction s;  // torsion correction for the smooth points, when it is known

  FatPointScheme<Field> target() const { return scheme.with_multiplicity(multiplicity); }
};

namespace detail {

/// Random lines, points and conics over a field.
template <class Field>
class PlaneGen {
 public:
  using E = typename Field::element_type;
  using Point = ProjPoint<E>;
  using Line = std::array<E, 3>;

  PlaneGen(const Field& k, Rng& rng) : k_(k), rng_(rng) {
    for (;;) {
      for (auto& x : t_) x = k_.random(rng_);
      if (!is_zero(det3<E>({t_[0], t_[1], t_[2]}, {t_[3], t_[4], t_[5]}, {t_[6], t_[7], t_[8]}))) break;
    }
  }

  const Field& field() const { return k_; }
  Rng& rng() { return rng_; }

  Line vec() {
    for (;;) {
      Line l{k_.random(rng_), k_.random(rng_), k_.random(rng_)};
      if (!is_zero(l[0]) || !is_zero(l[1]) || !is_zero(l[2])) return l;
    }
  }

  Point general_point() { return to_point(vec()); }
  Line random_line() { return vec(); }

  Point point_on(const Line& l) {
    for (;;) {
      const auto c = cross(l, vec());
      if (!is_zero(c[0]) || !is_zero(c[1]) || !is_zero(c[2])) return to_point(c);
    }
  }

  static Point meet(const Line& a, const Line& b) { return to_point(cross(a, b)); }
  static Line through(const Point& p, const Point& q) { return cross(p.coords(), q.coords()); }

  // the conic T(s^2 : s : 1); s = nullopt gives the point T(1 : 0 : 0)
  Point conic_point(std::optional<E> s) {
    const std::array<E, 3> v = s ? std::array<E, 3>{*s * *s, *s, k_.one()} : std::array<E, 3>{k_.one(), k_.zero(), k_.zero()};
    return to_point({t_[0] * v[0] + t_[1] * v[1] + t_[2] * v[2], t_[3] * v[0] + t_[4] * v[1] + t_[5] * v[2],
                     t_[6] * v[0] + t_[7] * v[1] + t_[8] * v[2]});
  }
  Point conic_point() { return conic_point(k_.random(rng_)); }

  Form<Field> line_form(const Line& l) const { return Form<Field>::linear(k_, l); }

  // the unique curve of degree d through pts (throws if not unique)
  Form<Field> curve_through(const std::vector<Point>& pts, int d) const {
    auto basis = ideal_basis(FatPointScheme<Field>::uniform(k_, pts, 1), d);
    if (basis.size() != 1) throw generation_failure("support curve is not unique");
    return basis[0];
  }

 private:
  static Point to_point(const std::array<E, 3>& c) { return Point(c[0], c[1], c[2]); }

  Field k_;
  Rng& rng_;
  std::array<E, 9> t_;
};

// Build, audit the reduced difference function, retry on failure.
template <class Field, class Build>
GeneratedConfig<Field> generate_audited(const std::string& name, int attempts, Build&& build) {
  std::string why = "no attempt made";
  for (int a = 0; a < attempts; ++a) {
    try {
      auto g = build();
      g.name = name;
      if (!g.expected_reduced) return g;
      const auto got = difference_function(g.scheme);
      if (got == *g.expected_reduced) return g;
      why = "reduced difference function " + got.to_string() + ", wanted " + g.expected_reduced->to_string();
    } catch (const invalid_geometry& e) {
      why = e.what();
    }
  }
  throw generation_failure(name + ": " + why);
}

}  // namespace detail

}  // namespace fatpoints
