#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "fatpoints/configs/generated.hpp"
#include "fatpoints/configs/nine_cases.hpp"
#include "fatpoints/cubicgroup/torsion.hpp"
#include "fatpoints/formulas/cubic_formulas.hpp"

namespace fatpoints {

/// sizes[i] points on the i-th of some general lines, plus `free` general points.
template <class Field>
GeneratedConfig<Field> gen_collinear_split(const Field& k, const std::vector<int>& sizes, int free, Rng& rng, int attempts = 5) {
  using E = typename Field::element_type;
  using Point = ProjPoint<E>;
  if (sizes.empty() && free < 1) throw invalid_input("collinear split: no points");
  for (int s : sizes)
    if (s < 1) throw invalid_input("collinear split: sizes must be positive");
  if (free < 0) throw invalid_input("collinear split: negative number of free points");

  std::string name = "split.";
  for (std::size_t i = 0; i < sizes.size(); ++i) name += (i ? "+" : "") + std::to_string(sizes[i]);
  if (free) name += (sizes.empty() ? "" : "+") + std::to_string(free) + "free";

  // splits of nine points that appear in the table
  std::optional<std::pair<int, int>> row;
  const auto sorted = [&] {
    auto s = sizes;
    std::sort(s.rbegin(), s.rend());
    return s;
  }();
  if (sorted == std::vector<int>{9} && free == 0) row = {{1, 1}};
  if (sorted == std::vector<int>{8} && free == 1) row = {{2, 1}};
  if (sorted == std::vector<int>{7} && free == 2) row = {{3, 1}};
  if (sorted == std::vector<int>{6, 3} && free == 0) row = {{4, 1}};
  if (sorted == std::vector<int>{5, 4} && free == 0) row = {{5, 1}};
  if (sorted == std::vector<int>{6} && free == 3) row = {{6, 1}};
  if (sorted == std::vector<int>{4, 4} && free == 1) row = {{7, 2}};
  if (sorted == std::vector<int>{5, 3} && free == 1) row = {{7, 3}};

  auto build = [&] {
    detail::PlaneGen<Field> g(k, rng);
    std::vector<std::array<E, 3>> lines;
    std::vector<Form<Field>> curves;
    std::vector<Point> pts;
    for (int s : sizes) {
      lines.push_back(g.random_line());
      curves.push_back(g.line_form(lines.back()));
      for (int i = 0; i < s; ++i) pts.push_back(g.point_on(lines.back()));
    }
    for (int i = 0; i < free; ++i) pts.push_back(g.general_point());
    // audit: each point lies on its own line only, and no three points are
    // collinear unless they share a line
    auto owner = [&](std::size_t i) -> long {
      long acc = 0;
      for (std::size_t l = 0; l < sizes.size(); ++l) {
        acc += sizes[l];
        if (static_cast<long>(i) < acc) return static_cast<long>(l);
      }
      return -1;
    };
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t l = 0; l < lines.size(); ++l) {
        const bool on = is_zero(lines[l][0] * pts[i].x() + lines[l][1] * pts[i].y() + lines[l][2] * pts[i].z());
        if (on != (owner(i) == static_cast<long>(l))) throw invalid_geometry("point on an unintended line");
      }
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        for (std::size_t c = b + 1; c < pts.size(); ++c)
          if (collinear(pts[a], pts[b], pts[c]) && !(owner(a) >= 0 && owner(a) == owner(b) && owner(b) == owner(c)))
            throw invalid_geometry("unintended collinear triple");
    GeneratedConfig<Field> out{"", FatPointScheme<Field>::uniform(k, std::move(pts), 1), 2, std::move(curves), std::nullopt,
                               std::nullopt, nullptr};
    if (row) {
      out.expected = nine_double_rows(row->first)[static_cast<std::size_t>(row->second - 1)].dh;
      out.expected_reduced = nine_reduced(row->first);
    }
    return out;
  };
  return detail::generate_audited<Field>(name, attempts, build);
}

namespace detail {

template <class Field>
CubicCurve<Field> random_weierstrass(const Field& k, Rng& rng) {
  for (;;) {
    try {
      return CubicCurve<Field>::weierstrass(k, k.random(rng), k.random(rng));
    } catch (const invalid_geometry&) {
    }
  }
}

template <class Field>
SFunction curve_s(const CubicCurve<Field>& c, std::vector<ProjPoint<typename Field::element_type>> pts) {
  return [c, pts = std::move(pts)](long t, long n, long m) -> long {
    if (n != static_cast<long>(pts.size())) throw invalid_input("s: wrong number of points");
    return s_value(c, pts, t, m);
  };
}

}  // namespace detail

/// 3t points cut on a smooth cubic by a curve of degree t.
template <class Field>
GeneratedConfig<Field> gen_ci_cubic(const Field& k, long t, Rng& rng, int attempts = 5) {
  if (t < 3) throw out_of_domain("complete intersection: t must be at least 3");
  return detail::generate_audited<Field>("ci.t" + std::to_string(t), attempts, [&] {
    const auto c = detail::random_weierstrass(k, rng);
    std::vector<ProjPoint<typename Field::element_type>> pts;
    for (const auto& p : points_with_sum(c, static_cast<std::size_t>(3 * t), c.identity(), rng)) pts.push_back(p.point);
    auto s = detail::curve_s(c, pts);
    return GeneratedConfig<Field>{"", FatPointScheme<Field>::uniform(k, std::move(pts), 1), 2, {c.form()},
                                  predict_ci(t).dh, predict_ci_reduced(t), std::move(s)};
  });
}

enum class CubicSupport { smooth, nodal, cuspidal, conic_line, three_lines };

inline std::string to_string(CubicSupport s) {
  switch (s) {
    case CubicSupport::smooth: return "smooth";
    case CubicSupport::nodal: return "nodal";
    case CubicSupport::cuspidal: return "cuspidal";
    case CubicSupport::conic_line: return "conic-line";
    case CubicSupport::three_lines: return "three-lines";
  }
  return "?";
}

inline CubicSupport parse_cubic_support(const std::string& s) {
  for (auto k : {CubicSupport::smooth, CubicSupport::nodal, CubicSupport::cuspidal, CubicSupport::conic_line, CubicSupport::three_lines})
    if (to_string(k) == s) return k;
  throw invalid_input("unknown cubic kind '" + s + "' (smooth, nodal, cuspidal, conic-line, three-lines)");
}

/// Constraint on the sum of the smooth points in the group of the cubic.
struct SumSpec {
  enum class Kind { generic, identity, order } kind = Kind::generic;
  long lambda = 1;

  static SumSpec parse(const std::string& s) {
    if (s == "generic") return {};
    if (s == "identity") return {Kind::identity, 1};
    if (s.rfind("order:", 0) == 0) {
      std::size_t used = 0;
      long l = 0;
      try {
        l = std::stol(s.substr(6), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != s.size() - 6 || l < 1) throw invalid_input("bad torsion order in '" + s + "'");
      return {Kind::order, l};
    }
    throw invalid_input("sum spec must be generic, identity or order:<lambda>");
  }

  std::string to_string() const {
    return kind == Kind::generic ? "generic" : kind == Kind::identity ? "identity" : "order:" + std::to_string(lambda);
  }
};

namespace detail {

// Points evenly distributed on a reducible cubic. With `cut`, they are the
// intersection with n/3 general lines, so every multiple mX is cut out too.
template <class Field>
GeneratedConfig<Field> reducible_points(const Field& k, CubicSupport kind, long n, bool cut, Rng& rng) {
  using E = typename Field::element_type;
  PlaneGen<Field> g(k, rng);
  std::vector<ProjPoint<E>> pts;
  std::vector<Form<Field>> curves;
  const long per = n / 3;
  if (kind == CubicSupport::conic_line) {
    const auto line = g.random_line();
    std::vector<ProjPoint<E>> five;
    for (int i = 0; i < 5; ++i) five.push_back(g.conic_point(k.from_int(i)));
    curves.push_back(g.curve_through(five, 2));
    curves.push_back(g.line_form(line));
    if (cut) {
      for (long j = 0; j < per; ++j) {
        const auto a = g.conic_point(), b = g.conic_point();
        pts.push_back(a);
        pts.push_back(b);
        pts.push_back(g.meet(g.through(a, b), line));
      }
    } else {
      for (long j = 0; j < 2 * per; ++j) pts.push_back(g.conic_point());
      for (long j = 0; j < per; ++j) pts.push_back(g.point_on(line));
    }
    for (const auto& p : pts)
      if (curves[0](p) == k.zero() && curves[1](p) == k.zero()) throw invalid_geometry("point at a singular point of the cubic");
  } else {
    std::array<std::array<E, 3>, 3> ls{g.random_line(), g.random_line(), g.random_line()};
    if (is_zero(det3(ls[0], ls[1], ls[2]))) throw invalid_geometry("concurrent lines");
    for (const auto& l : ls) curves.push_back(g.line_form(l));
    for (long j = 0; j < per; ++j) {
      const auto d = cut ? g.random_line() : std::array<E, 3>{};
      for (const auto& l : ls) pts.push_back(cut ? g.meet(l, d) : g.point_on(l));
    }
    for (const auto& p : pts) {
      int on = 0;
      for (const auto& c : curves) on += c(p) == k.zero();
      if (on != 1) throw invalid_geometry("point at a singular point of the cubic");
    }
  }
  GeneratedConfig<Field> out{"", FatPointScheme<Field>::uniform(k, std::move(pts), 1), 1, std::move(curves),
                             std::nullopt, std::nullopt, nullptr};
  // the torsion correction is forced: generic points carry none, cut points
  // are a complete intersection
  out.s = [cut](long t, long nn, long m) -> long {
    if (!cut || m == 0 || 3 * t != nn * m) return 0;
    return nn == 9 ? m : 1;
  };
  return out;
}

}  // namespace detail

/// n points on a cubic of the given kind carrying multiplicity m, with the
/// sum of the smooth points constrained by `sum`. With include_singular the
/// singular point is added as an (n+1)-st point.
template <class Field>
GeneratedConfig<Field> gen_on_cubic(const Field& k, CubicSupport kind, long n, int m, const SumSpec& sum, bool include_singular,
                                    Rng& rng, int attempts = 5) {
  using E = typename Field::element_type;
  if (n < 1 || m < 1) throw invalid_input("on cubic: need n >= 1 and m >= 1");
  const bool reducible = kind == CubicSupport::conic_line || kind == CubicSupport::three_lines;
  if (include_singular && kind != CubicSupport::nodal && kind != CubicSupport::cuspidal)
    throw invalid_input("on cubic: only nodal and cuspidal cubics have a singular point to include");
  if (reducible && n % 3 != 0) throw invalid_input("on cubic: evenly distributed points on a reducible cubic need 3 | n");
  if (reducible && sum.kind == SumSpec::Kind::order)
    throw generation_failure("on cubic: torsion orders are not available on reducible cubics");

  const std::string name = "on-cubic." + to_string(kind) + ".n" + std::to_string(n) + ".m" + std::to_string(m) + "." +
                           sum.to_string() + (include_singular ? ".singular" : "");
  auto finish = [&](GeneratedConfig<Field> g) {
    g.multiplicity = m;
    const long total = static_cast<long>(g.scheme.size());
    if (!include_singular && n >= 9) {
      g.expected = predict_uniform(n, m, g.s).dh;
      if (sum.kind == SumSpec::Kind::generic) g.expected_reduced = predict_on_cubic_reduced(n);
      if (sum.kind == SumSpec::Kind::identity && n % 3 == 0) g.expected_reduced = predict_ci_reduced(n / 3);
    } else if (include_singular && m == 2 && total / 3 > 3) {
      const long delta = total % 3;
      std::string branch;
      if (sum.kind == SumSpec::Kind::generic) branch = delta == 0 ? "d0" : delta == 1 ? "d1-first" : "d2";
      if (sum.kind == SumSpec::Kind::identity && delta == 1) branch = "d1-second";
      if (!branch.empty()) g.expected = predict_singular_cubic(total, branch).dh;
    }
    return g;
  };

  return detail::generate_audited<Field>(name, attempts, [&] {
    if (reducible) return finish(detail::reducible_points(k, kind, n, sum.kind == SumSpec::Kind::identity, rng));
    std::optional<CubicCurve<Field>> c;
    std::optional<GroupElement<E>> target;
    if (kind == CubicSupport::nodal) c = CubicCurve<Field>::nodal(k);
    if (kind == CubicSupport::cuspidal) c = CubicCurve<Field>::cuspidal(k);
    if (kind == CubicSupport::smooth) {
      // y^2 = x^3 + 1 has points of order 2 and 3 over every field of characteristic > 3
      c = sum.kind == SumSpec::Kind::order ? CubicCurve<Field>::weierstrass(k, k.zero(), k.one()) : detail::random_weierstrass(k, rng);
    }
    switch (sum.kind) {
      case SumSpec::Kind::generic: target = random_element(*c, rng); break;
      case SumSpec::Kind::identity: target = c->identity(); break;
      case SumSpec::Kind::order:
        target = torsion_point(*c, sum.lambda, rng);
        if (!target)
          throw generation_failure(name + ": no point of order " + std::to_string(sum.lambda) + " on " + c->describe());
        break;
    }
    std::vector<ProjPoint<E>> pts;
    for (const auto& p : points_with_sum(*c, static_cast<std::size_t>(n), *target, rng)) pts.push_back(p.point);
    auto s = detail::curve_s(*c, pts);
    if (include_singular) pts.insert(pts.begin(), *c->singular_point());
    return finish(GeneratedConfig<Field>{"", FatPointScheme<Field>::uniform(k, std::move(pts), 1), m, {c->form()},
                                         std::nullopt, std::nullopt, std::move(s)});
  });
}

}  // namespace fatpoints
