#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fatpoints/configs/generated.hpp"
#include "fatpoints/cubicgroup/torsion.hpp"
#include "fatpoints/formulas/nine_points.hpp"

namespace fatpoints {

struct NineVariant {
  int case_no;
  std::string name;
  int row;  // 1-based row of the case in the table
};

/// Every construction of nine points used to realize the table, with the row it realizes.
inline const std::vector<NineVariant>& nine_variants() {
  static const std::vector<NineVariant> v = {
      {1, "collinear", 1},
      {2, "8+1", 1},
      {3, "7+2", 1},
      {3, "7+2-through", 1},
      {4, "6+3", 1},
      {4, "6+3-shared", 1},
      {5, "conic", 1},
      {5, "5+4", 1},
      {5, "5+4-shared", 2},
      {6, "6+3", 1},
      {6, "6+2+1", 1},
      {7, "ci", 1},
      {7, "conic8+1", 2},
      {7, "4+4+1", 2},
      {7, "5+3+1", 3},
      {7, "conic5+line4", 3},
      {7, "two-lines", 4},
      {8, "generic", 1},
      {8, "conic7+line3", 2},
      {8, "conic7+2", 2},
      {8, "line4+5", 2},
      {8, "node+8", 2},
      {8, "conic7+line-both", 3},
      {8, "triangle", 4},
      {8, "five-lines", 5},
  };
  return v;
}

inline std::vector<NineVariant> nine_variants(int c) {
  std::vector<NineVariant> out;
  for (const auto& v : nine_variants())
    if (v.case_no == c) out.push_back(v);
  return out;
}

namespace detail {

template <class Field>
std::vector<ProjPoint<typename Field::element_type>> nine_points(int c, const std::string& variant, PlaneGen<Field>& g,
                                                                 std::vector<Form<Field>>& curves) {
  using Point = ProjPoint<typename Field::element_type>;
  std::vector<Point> v;
  auto on = [&](const auto& line, int count) {
    for (int i = 0; i < count; ++i) v.push_back(g.point_on(line));
  };
  auto general = [&](int count) {
    for (int i = 0; i < count; ++i) v.push_back(g.general_point());
  };
  auto conic = [&](int count) {
    for (int i = 0; i < count; ++i) v.push_back(g.conic_point());
  };
  auto add_line = [&](const auto& l) {
    curves.push_back(g.line_form(l));
    return l;
  };
  const std::string key = std::to_string(c) + ":" + variant;

  if (key == "1:collinear") {
    on(add_line(g.random_line()), 9);
  } else if (key == "2:8+1") {
    on(add_line(g.random_line()), 8);
    general(1);
  } else if (key == "3:7+2" || key == "6:6+3") {
    const int k = c == 3 ? 7 : 6;
    on(add_line(g.random_line()), k);
    general(9 - k);
  } else if (key == "3:7+2-through" || key == "6:6+2+1") {
    // the line through the two extra points meets the long line at a point of X
    const int k = c == 3 ? 7 : 6;
    const auto l1 = add_line(g.random_line());
    const auto p = g.point_on(l1);
    v.push_back(p);
    on(l1, k - 1);
    const auto l2 = add_line(g.through(p, g.general_point()));
    on(l2, 2);
    general(9 - k - 2);
  } else if (key == "4:6+3" || key == "5:5+4" || key == "7:5+3+1" || key == "7:4+4+1") {
    const int a = c == 4 ? 6 : c == 5 ? 5 : variant == "5+3+1" ? 5 : 4;
    const int b = c == 4 ? 3 : c == 5 ? 4 : variant == "5+3+1" ? 3 : 4;
    on(add_line(g.random_line()), a);
    on(add_line(g.random_line()), b);
    general(9 - a - b);
  } else if (key == "4:6+3-shared" || key == "5:5+4-shared" || key == "7:two-lines") {
    // the intersection of the two lines is a point of X
    const int a = c == 4 ? 5 : c == 5 ? 4 : 3;
    const int b = c == 4 ? 3 : 4;
    const auto l1 = add_line(g.random_line()), l2 = add_line(g.random_line());
    v.push_back(g.meet(l1, l2));
    on(l1, a);
    on(l2, b);
    general(8 - a - b);
  } else if (key == "5:conic") {
    conic(9);
  } else if (key == "7:ci") {
    const auto curve = CubicCurve<Field>::nodal(g.field());
    curves.push_back(curve.form());
    for (const auto& p : points_with_sum(curve, 9, curve.identity(), g.rng())) v.push_back(p.point);
  } else if (key == "8:node+8") {
    const auto curve = CubicCurve<Field>::nodal(g.field());
    curves.push_back(curve.form());
    v.push_back(*curve.singular_point());
    for (const auto& p : points_with_sum(curve, 8, random_element(curve, g.rng()), g.rng())) v.push_back(p.point);
  } else if (key == "7:conic8+1" || key == "8:conic7+2") {
    const int k = c == 7 ? 8 : 7;
    conic(k);
    general(9 - k);
  } else if (key == "7:conic5+line4" || key == "8:conic7+line3") {
    // the line meets the conic at a point of X
    const int k = c == 7 ? 5 : 7;
    const auto p0 = g.conic_point();
    v.push_back(p0);
    conic(k - 1);
    const auto l = add_line(g.through(p0, g.general_point()));
    on(l, 9 - k);
  } else if (key == "8:conic7+line-both") {
    // both points where the line meets the conic are in X
    const auto p0 = g.conic_point(), p1 = g.conic_point();
    v.push_back(p0);
    v.push_back(p1);
    conic(5);
    on(add_line(g.through(p0, p1)), 2);
  } else if (key == "8:line4+5") {
    on(add_line(g.random_line()), 4);
    general(5);
  } else if (key == "8:generic") {
    general(9);
  } else if (key == "8:triangle") {
    const auto a = add_line(g.random_line()), b = add_line(g.random_line()), d = add_line(g.random_line());
    v.push_back(g.meet(a, b));
    v.push_back(g.meet(b, d));
    v.push_back(g.meet(a, d));
    on(a, 2);
    on(b, 2);
    on(d, 2);
  } else if (key == "8:five-lines") {
    std::vector<std::array<typename Field::element_type, 3>> ls;
    for (int i = 0; i < 5; ++i) ls.push_back(add_line(g.random_line()));
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) v.push_back(g.meet(ls[i], ls[j]));
    v.pop_back();
  } else {
    throw invalid_input("nine points case " + std::to_string(c) + ": unknown variant '" + variant + "'");
  }
  if (variant.find("conic") != std::string::npos) {
    std::vector<Point> on_conic;
    for (std::size_t i = 0; i < 5; ++i) on_conic.push_back(g.conic_point(g.field().from_int(static_cast<long>(i))));
    curves.push_back(g.curve_through(on_conic, 2));
  }
  return v;
}

}  // namespace detail

/// Nine points realizing a row of the table; `expected` is the difference
/// function of the double point scheme.
template <class Field>
GeneratedConfig<Field> gen_nine_case(const Field& k, int c, const std::string& variant, Rng& rng, int attempts = 5) {
  const NineVariant* spec = nullptr;
  for (const auto& v : nine_variants())
    if (v.case_no == c && v.name == variant) spec = &v;
  if (!spec) throw invalid_input("nine points case " + std::to_string(c) + ": unknown variant '" + variant + "'");
  const auto rows = nine_double_rows(c);
  return detail::generate_audited<Field>("nine." + std::to_string(c) + "." + variant, attempts, [&] {
    detail::PlaneGen<Field> g(k, rng);
    std::vector<Form<Field>> curves;
    auto pts = detail::nine_points(c, variant, g, curves);
    GeneratedConfig<Field> out{"", FatPointScheme<Field>::uniform(k, std::move(pts), 1), 2, std::move(curves),
                               rows[static_cast<std::size_t>(spec->row - 1)].dh, nine_reduced(c), nullptr};
    return out;
  });
}

}  // namespace fatpoints
