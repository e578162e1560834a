#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fatpoints/error.hpp"
#include "fatpoints/geometry/form.hpp"
#include "fatpoints/geometry/proj_point.hpp"

namespace fatpoints {

enum class CubicKind { weierstrass, nodal, cuspidal, reducible };

inline std::string to_string(CubicKind k) {
  switch (k) {
    case CubicKind::weierstrass: return "weierstrass";
    case CubicKind::nodal: return "nodal";
    case CubicKind::cuspidal: return "cuspidal";
    case CubicKind::reducible: return "reducible";
  }
  return "?";
}

/// Element of the group of smooth points.
///  weierstrass: affine point (u, v) = (x, y), or the flex at infinity
///  nodal:       u in k*, identity 1
///  cuspidal:    u in k, identity 0
template <class E>
struct GroupElement {
  E u;
  E v;
  bool infinity = false;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
};

template <class E>
struct CurvePoint {
  ProjPoint<E> point;
  bool smooth;
};

/// A plane cubic. Irreducible kinds carry a group law on the smooth locus:
///   weierstrass  y^2 z = x^3 + a x z^2 + b z^3, identity (0:1:0)
///   nodal        y^2 z = x^3 + x^2 z, node (0:0:1), u = (y-x)/(y+x)
///   cuspidal     y^2 z = x^3, cusp (0:0:1), u = x/y
/// In all three, three smooth points are collinear iff they sum to zero.
/// Reducible cubics are a product of components and have no group law here.
template <class Field>
class CubicCurve {
 public:
  using E = typename Field::element_type;
  using Element = GroupElement<E>;
  using Point = ProjPoint<E>;

  static CubicCurve weierstrass(const Field& k, const E& a, const E& b) {
    if (k.characteristic() != 0 && k.characteristic() <= 3) throw invalid_input("Weierstrass form needs characteristic > 3");
    const E disc = k.from_int(4) * a * a * a + k.from_int(27) * b * b;
    if (is_zero(disc)) throw invalid_geometry("weierstrass: 4a^3 + 27b^2 = 0, curve is singular");
    CubicCurve c(k, CubicKind::weierstrass);
    c.a_ = a;
    c.b_ = b;
    c.form_[{0, 2, 1}] = k.one();
    c.form_[{3, 0, 0}] = -k.one();
    c.form_[{1, 0, 2}] = -a;
    c.form_[{0, 0, 3}] = -b;
    return c;
  }

  static CubicCurve nodal(const Field& k) {
    CubicCurve c(k, CubicKind::nodal);
    c.form_[{0, 2, 1}] = k.one();
    c.form_[{3, 0, 0}] = -k.one();
    c.form_[{2, 0, 1}] = -k.one();
    return c;
  }

  static CubicCurve cuspidal(const Field& k) {
    CubicCurve c(k, CubicKind::cuspidal);
    c.form_[{0, 2, 1}] = k.one();
    c.form_[{3, 0, 0}] = -k.one();
    return c;
  }

  // Components must have total degree 3 and be pairwise non-proportional.
  static CubicCurve reducible(const Field& k, std::vector<Form<Field>> components) {
    int deg = 0;
    for (const auto& f : components) {
      if (f.degree() < 1 || f.is_zero_form()) throw invalid_geometry("reducible: components must be nonzero forms of positive degree");
      deg += f.degree();
    }
    if (deg != 3 || components.size() < 2) throw invalid_geometry("reducible: need two or three components of total degree 3");
    for (std::size_t i = 0; i < components.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (proportional(components[i], components[j])) throw invalid_geometry("reducible: repeated component");
    CubicCurve c(k, CubicKind::reducible);
    Form<Field> prod = components[0];
    for (std::size_t i = 1; i < components.size(); ++i) prod = prod * components[i];
    c.form_ = prod;
    c.components_ = std::move(components);
    return c;
  }

  CubicKind kind() const { return kind_; }
  const Field& field() const { return field_; }
  const Form<Field>& form() const { return form_; }
  const std::vector<Form<Field>>& components() const { return components_; }
  const E& a() const { return a_; }
  const E& b() const { return b_; }
  bool has_group_law() const { return kind_ != CubicKind::reducible; }

  bool contains(const Point& p) const { return form_.vanishes_at(p); }
  bool is_smooth_point(const Point& p) const { return contains(p) && !form_.singular_at(p); }

  std::optional<Point> singular_point() const {
    if (kind_ == CubicKind::nodal || kind_ == CubicKind::cuspidal) return Point(field_.zero(), field_.zero(), field_.one());
    return std::nullopt;
  }

  CurvePoint<E> curve_point(const Point& p) const {
    if (!contains(p)) throw invalid_geometry("point is not on the curve");
    return {p, !form_.singular_at(p)};
  }

  Element identity() const {
    switch (kind_) {
      case CubicKind::weierstrass: return {field_.zero(), field_.zero(), true};
      case CubicKind::nodal: return {field_.one(), field_.zero(), false};
      case CubicKind::cuspidal: return {field_.zero(), field_.zero(), false};
      default: throw invalid_input("reducible cubic: no group law");
    }
  }

  // Group element of a smooth point.
  Element element_at(const Point& p) const {
    require_group();
    if (!contains(p)) throw invalid_input("point is not on the curve");
    if (form_.singular_at(p)) throw invalid_input("singular point has no group element");
    switch (kind_) {
      case CubicKind::weierstrass:
        if (is_zero(p.z())) return identity();
        return {p.x(), p.y(), false};
      case CubicKind::nodal:
        return {(p.y() - p.x()) / (p.y() + p.x()), field_.zero(), false};
      default:
        return {p.x() / p.y(), field_.zero(), false};
    }
  }

  Point point_of(const Element& g) const {
    require_group();
    const E one = field_.one();
    switch (kind_) {
      case CubicKind::weierstrass:
        if (g.infinity) return Point(field_.zero(), one, field_.zero());
        return Point(g.u, g.v, one);
      case CubicKind::nodal: {
        if (is_zero(g.u)) throw invalid_input("nodal parameter must be nonzero");
        const E four = field_.from_int(4), w = one - g.u;
        return Point(four * g.u * w, four * g.u * (one + g.u), w * w * w);
      }
      default:
        return Point(g.u, one, g.u * g.u * g.u);
    }
  }

  // Raises if g does not lie on this curve's group.
  void check(const Element& g) const {
    require_group();
    if (kind_ == CubicKind::weierstrass && !g.infinity) {
      if (!(g.v * g.v == g.u * g.u * g.u + a_ * g.u + b_)) throw invalid_input("element is not on the curve");
    }
    if (kind_ == CubicKind::nodal && is_zero(g.u)) throw invalid_input("nodal parameter must be nonzero");
  }

  Element add(const Element& p, const Element& q) const {
    check(p);
    check(q);
    switch (kind_) {
      case CubicKind::nodal: return {p.u * q.u, field_.zero(), false};
      case CubicKind::cuspidal: return {p.u + q.u, field_.zero(), false};
      default: break;
    }
    if (p.infinity) return q;
    if (q.infinity) return p;
    E lambda;
    if (p.u == q.u) {
      if (p.v == -q.v) return identity();
      lambda = (field_.from_int(3) * p.u * p.u + a_) / (field_.from_int(2) * p.v);
    } else {
      lambda = (q.v - p.v) / (q.u - p.u);
    }
    const E x3 = lambda * lambda - p.u - q.u;
    return {x3, lambda * (p.u - x3) - p.v, false};
  }

  Element neg(const Element& p) const {
    check(p);
    switch (kind_) {
      case CubicKind::nodal: return {field_.one() / p.u, field_.zero(), false};
      case CubicKind::cuspidal: return {-p.u, field_.zero(), false};
      default: break;
    }
    if (p.infinity) return p;
    return {p.u, -p.v, false};
  }

  Element multiply(Element p, std::int64_t k) const {
    if (k < 0) {
      p = neg(p);
      k = -k;
    }
    Element r = identity();
    while (k > 0) {
      if (k & 1) r = add(r, p);
      p = add(p, p);
      k >>= 1;
    }
    return r;
  }

  // Least k <= bound with k p = 0, or nullopt ("exceeds bound").
  std::optional<long> order(const Element& p, long bound) const {
    if (bound < 1) throw invalid_input("order: bound must be at least 1");
    Element acc = p;
    for (long k = 1; k <= bound; ++k) {
      if (acc == identity()) return k;
      acc = add(acc, p);
    }
    return std::nullopt;
  }

  Element sum(const std::vector<Point>& pts) const {
    Element s = identity();
    for (const auto& p : pts) s = add(s, element_at(p));
    return s;
  }

  std::string describe() const {
    if (kind_ == CubicKind::weierstrass) {
      std::ostringstream os;
      os << "weierstrass " << a_ << ' ' << b_;
      return os.str();
    }
    if (kind_ == CubicKind::reducible) {
      std::string s = "reducible ";
      for (std::size_t i = 0; i < components_.size(); ++i) s += (i ? ";" : "") + components_[i].to_string();
      return s;
    }
    return to_string(kind_);
  }

 private:
  CubicCurve(const Field& k, CubicKind kind) : field_(k), kind_(kind), form_(k, 3), a_(k.zero()), b_(k.zero()) {}

  void require_group() const {
    if (!has_group_law()) throw invalid_input("reducible cubic: no group law");
  }

  static bool proportional(const Form<Field>& f, const Form<Field>& g) {
    if (f.degree() != g.degree()) return false;
    const auto& a = f.coefficients();
    const auto& b = g.coefficients();
    std::size_t piv = 0;
    while (is_zero(a[piv])) ++piv;
    if (is_zero(b[piv])) return false;
    const auto s = b[piv] / a[piv];
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i] * s == b[i])) return false;
    return true;
  }

  Field field_;
  CubicKind kind_;
  Form<Field> form_;
  std::vector<Form<Field>> components_;
  E a_, b_;
};

}  // namespace fatpoints
