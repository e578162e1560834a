#include <gtest/gtest.h>

#include <sstream>

#include "fatpoints/configs/configs.hpp"
#include "fatpoints/geometry/point_file.hpp"

using namespace fatpoints;

namespace {

// 1000003 = 1 mod 6, so the nodal group has points of order 2 and 3
PrimeField field() { return PrimeField(1000003); }

HVector dh(const char* s) { return HVector::parse(s); }

template <class Field>
HVector doubled(const GeneratedConfig<Field>& g) {
  return difference_function(g.target());
}

template <class Field>
long count_on(const Form<Field>& f, const FatPointScheme<Field>& z) {
  long n = 0;
  for (const auto& p : z.points())
    if (is_zero(f(p))) ++n;
  return n;
}

}  // namespace

TEST(NineCases, TableExamples) {
  Rng rng = derive_rng(1, "nine");
  const auto k = field();
  auto g = gen_nine_case(k, 1, "collinear", rng);
  EXPECT_EQ(g.scheme.size(), 9u);
  ASSERT_EQ(g.curves.size(), 1u);
  EXPECT_EQ(count_on(g.curves[0], g.scheme), 9);
  EXPECT_EQ(doubled(g), dh("1 2 2 2 2 2 2 2 2 2 1 1 1 1 1 1 1 1"));
  EXPECT_EQ(doubled(gen_nine_case(k, 7, "ci", rng)), dh("1 2 3 4 5 6 4 2"));
  EXPECT_EQ(doubled(gen_nine_case(k, 8, "five-lines", rng)), dh("1 2 3 4 5 5 4 3"));
}

TEST(NineCases, EveryVariantMatchesItsRow) {
  Rng rng = derive_rng(2, "nine");
  const auto k = field();
  for (const auto& v : nine_variants()) {
    const auto g = gen_nine_case(k, v.case_no, v.name, rng);
    EXPECT_EQ(difference_function(g.scheme), nine_reduced(v.case_no)) << g.name;
    ASSERT_TRUE(g.expected) << g.name;
    EXPECT_EQ(doubled(g), *g.expected) << g.name;
    EXPECT_EQ(*g.expected, nine_double_rows(v.case_no)[static_cast<std::size_t>(v.row - 1)].dh) << g.name;
  }
}

TEST(NineCases, CurvesContainTheirPoints) {
  Rng rng = derive_rng(3, "nine");
  const auto k = field();
  auto g = gen_nine_case(k, 8, "conic7+line-both", rng);
  ASSERT_EQ(g.curves.size(), 2u);
  EXPECT_EQ(count_on(g.curves[0], g.scheme), 4);  // the line
  EXPECT_EQ(count_on(g.curves[1], g.scheme), 7);  // the conic
  g = gen_nine_case(k, 8, "conic7+line3", rng);
  EXPECT_EQ(count_on(g.curves[0], g.scheme), 3);
  EXPECT_EQ(count_on(g.curves[1], g.scheme), 7);
  g = gen_nine_case(k, 8, "triangle", rng);
  for (const auto& l : g.curves) EXPECT_EQ(count_on(l, g.scheme), 4);
}

TEST(NineCases, UnknownVariant) {
  Rng rng = derive_rng(4, "nine");
  EXPECT_THROW(gen_nine_case(field(), 7, "collinear", rng), invalid_input);
  EXPECT_THROW(gen_nine_case(field(), 9, "generic", rng), invalid_input);
}

TEST(Split, Examples) {
  Rng rng = derive_rng(5, "split");
  const auto k = field();
  auto g = gen_collinear_split(k, {9}, 0, rng);
  EXPECT_EQ(difference_function(g.scheme), nine_reduced(1));
  g = gen_collinear_split(k, {6, 3}, 0, rng);
  EXPECT_EQ(difference_function(g.scheme), nine_reduced(4));
  ASSERT_TRUE(g.expected);
  EXPECT_EQ(doubled(g), *g.expected);
  g = gen_collinear_split(k, {5, 3}, 1, rng);
  EXPECT_EQ(g.name, "split.5+3+1free");
  EXPECT_EQ(doubled(g), dh("1 2 3 4 5 6 3 1 1 1"));
  EXPECT_THROW(gen_collinear_split(k, {0}, 1, rng), invalid_input);
  EXPECT_THROW(gen_collinear_split(k, {}, 0, rng), invalid_input);
}

TEST(CompleteIntersection, Examples) {
  Rng rng = derive_rng(6, "ci");
  const auto k = field();
  auto g = gen_ci_cubic(k, 3, rng);
  EXPECT_EQ(g.scheme.size(), 9u);
  EXPECT_EQ(doubled(g), dh("1 2 3 4 5 6 4 2"));
  g = gen_ci_cubic(k, 4, rng);
  EXPECT_EQ(g.scheme.size(), 12u);
  EXPECT_EQ(doubled(g), dh("1 2 3 4 5 6 6 5 3 1"));
  g = gen_ci_cubic(k, 5, rng);
  EXPECT_EQ(difference_function(g.scheme), dh("1 2 3 3 3 2 1"));
  EXPECT_EQ(count_on(g.curves[0], g.scheme), 15);
  EXPECT_THROW(gen_ci_cubic(k, 2, rng), out_of_domain);
}

TEST(OnCubic, RemarkExamples) {
  Rng rng = derive_rng(7, "cubic");
  const auto k = field();
  auto g = gen_on_cubic(k, CubicSupport::smooth, 12, 2, SumSpec::parse("generic"), false, rng);
  EXPECT_EQ(doubled(g), dh("1 2 3 4 5 6 6 6 3"));
  g = gen_on_cubic(k, CubicSupport::smooth, 12, 2, SumSpec::parse("order:2"), false, rng);
  EXPECT_EQ(doubled(g), dh("1 2 3 4 5 6 6 6 2 1"));
  g = gen_on_cubic(k, CubicSupport::nodal, 9, 2, SumSpec::parse("order:3"), false, rng);
  EXPECT_EQ(*g.expected, dh("1 2 3 4 5 6 6"));
  EXPECT_EQ(doubled(g), *g.expected);
}

TEST(OnCubic, ExpectedMatchesBruteForce) {
  Rng rng = derive_rng(8, "cubic");
  const auto k = field();
  for (auto kind : {CubicSupport::smooth, CubicSupport::nodal, CubicSupport::cuspidal, CubicSupport::conic_line, CubicSupport::three_lines})
    for (const char* sum : {"generic", "identity"})
      for (long n : {9L, 12L}) {
        const auto g = gen_on_cubic(k, kind, n, 2, SumSpec::parse(sum), false, rng);
        ASSERT_TRUE(g.expected) << g.name;
        EXPECT_EQ(difference_function(g.scheme), *g.expected_reduced) << g.name;
        EXPECT_EQ(doubled(g), *g.expected) << g.name;
      }
}

TEST(OnCubic, NodeIncluded) {
  Rng rng = derive_rng(9, "cubic");
  const auto k = field();
  // n smooth points plus the node: 12, 13, 14 points in all
  for (long n : {11L, 12L, 13L}) {
    const auto g = gen_on_cubic(k, CubicSupport::nodal, n, 2, SumSpec::parse("generic"), true, rng);
    EXPECT_EQ(g.scheme.size(), static_cast<std::size_t>(n + 1));
    ASSERT_TRUE(g.expected) << g.name;
    EXPECT_EQ(doubled(g), *g.expected) << g.name;
  }
  const auto g = gen_on_cubic(k, CubicSupport::nodal, 12, 2, SumSpec::parse("identity"), true, rng);
  ASSERT_TRUE(g.expected);
  EXPECT_EQ(*g.expected, predict_singular_cubic(13, "d1-second").dh);
  EXPECT_EQ(doubled(g), *g.expected);
}

TEST(OnCubic, Errors) {
  Rng rng = derive_rng(10, "cubic");
  const auto k = field();
  EXPECT_THROW(gen_on_cubic(k, CubicSupport::cuspidal, 9, 2, SumSpec::parse("order:2"), false, rng), generation_failure);
  EXPECT_THROW(gen_on_cubic(k, CubicSupport::three_lines, 9, 2, SumSpec::parse("order:2"), false, rng), generation_failure);
  EXPECT_THROW(gen_on_cubic(k, CubicSupport::smooth, 9, 2, SumSpec::parse("generic"), true, rng), invalid_input);
  EXPECT_THROW(gen_on_cubic(k, CubicSupport::conic_line, 10, 2, SumSpec::parse("generic"), false, rng), invalid_input);
  EXPECT_THROW(SumSpec::parse("order:x"), invalid_input);
  EXPECT_THROW(SumSpec::parse("random"), invalid_input);
  EXPECT_THROW(parse_cubic_support("quartic"), invalid_input);
}

TEST(Generators, DeterministicUnderSeed) {
  const auto k = field();
  auto run = [&](std::uint64_t seed) {
    Rng rng = derive_rng(seed, "det");
    std::ostringstream out;
    write_point_file(out, gen_nine_case(k, 8, "generic", rng).scheme);
    write_point_file(out, gen_on_cubic(k, CubicSupport::nodal, 10, 2, SumSpec::parse("generic"), false, rng).scheme);
    return out.str();
  };
  EXPECT_EQ(run(42), run(42));
  EXPECT_NE(run(42), run(43));
}
