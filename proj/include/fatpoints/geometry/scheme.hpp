#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fatpoints/error.hpp"
#include "fatpoints/geometry/proj_point.hpp"

namespace fatpoints {

inline long binomial2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }  // C(n, 2)

/// Z = m_1 p_1 + ... + m_n p_n: distinct points with positive multiplicities.
template <class Field>
class FatPointScheme {
 public:
  using E = typename Field::element_type;
  using Point = ProjPoint<E>;

  explicit FatPointScheme(Field field) : field_(std::move(field)) {}
  FatPointScheme(Field field, std::vector<Point> points, std::vector<int> mults)
      : field_(std::move(field)), points_(std::move(points)), mults_(std::move(mults)) {
    if (points_.size() != mults_.size()) throw invalid_input("FatPointScheme: points and multiplicities differ in length");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (mults_[i] < 1) throw invalid_input("FatPointScheme: multiplicity must be positive");
      for (std::size_t j = 0; j < i; ++j)
        if (points_[i] == points_[j]) throw invalid_geometry("FatPointScheme: duplicate point " + std::to_string(j) + " and " + std::to_string(i));
    }
  }

  static FatPointScheme uniform(Field field, std::vector<Point> points, int m) {
    std::vector<int> mults(points.size(), m);
    return FatPointScheme(std::move(field), std::move(points), std::move(mults));
  }

  const Field& field() const { return field_; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<int>& multiplicities() const { return mults_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  // sum_i C(m_i + 1, 2)
  long degree() const {
    long d = 0;
    for (int m : mults_) d += binomial2(m + 1);
    return d;
  }

  FatPointScheme with_multiplicity(int m) const { return uniform(field_, points_, m); }
  FatPointScheme reduced() const { return with_multiplicity(1); }
  FatPointScheme doubled() const { return with_multiplicity(2); }

  bool contains(const Point& p) const {
    for (const auto& q : points_)
      if (q == p) return true;
    return false;
  }

 private:
  Field field_;
  std::vector<Point> points_;
  std::vector<int> mults_;
};

}  // namespace fatpoints
