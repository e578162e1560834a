#pragma once

#include <array>
#include <ostream>

#include "fatpoints/error.hpp"

namespace fatpoints {

/// A point of the projective plane, stored normalized: the last nonzero
/// coordinate is one. Equality is equality of normalized coordinates.
template <class E>
class ProjPoint {
 public:
  ProjPoint(E x, E y, E z) : c_{std::move(x), std::move(y), std::move(z)} {
    int last = -1;
    for (int i = 2; i >= 0; --i) {
      if (!is_zero(c_[i])) {
        last = i;
        break;
      }
    }
    if (last < 0) throw invalid_geometry("ProjPoint: all coordinates are zero");
    const E s = c_[last];
    for (int i = 0; i <= last; ++i) c_[i] /= s;
  }

  const E& x() const { return c_[0]; }
  const E& y() const { return c_[1]; }
  const E& z() const { return c_[2]; }
  const E& operator[](int i) const { return c_[i]; }
  const std::array<E, 3>& coords() const { return c_; }

  // Index of the coordinate normalized to one.
  int chart() const { return !is_zero(c_[2]) ? 2 : (!is_zero(c_[1]) ? 1 : 0); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const ProjPoint& p) {
    return os << '(' << p.c_[0] << ':' << p.c_[1] << ':' << p.c_[2] << ')';
  }

 private:
  std::array<E, 3> c_;
};

// Cross product: the line through two points, or the point on two lines.
template <class E>
std::array<E, 3> cross(const std::array<E, 3>& a, const std::array<E, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class E>
E det3(const std::array<E, 3>& a, const std::array<E, 3>& b, const std::array<E, 3>& c) {
  const auto ab = cross(a, b);
  return ab[0] * c[0] + ab[1] * c[1] + ab[2] * c[2];
}

template <class E>
bool collinear(const ProjPoint<E>& a, const ProjPoint<E>& b, const ProjPoint<E>& c) {
  return is_zero(det3(a.coords(), b.coords(), c.coords()));
}

}  // namespace fatpoints
