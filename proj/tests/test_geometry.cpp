#include <gtest/gtest.h>

#include <sstream>

#include "fatpoints/exactalg/embed.hpp"
#include "fatpoints/geometry/form.hpp"
#include "fatpoints/geometry/hilbert.hpp"
#include "fatpoints/geometry/hvector.hpp"
#include "fatpoints/geometry/point_file.hpp"
#include "fatpoints/geometry/scheme.hpp"

using namespace fatpoints;

namespace {

using QPoint = ProjPoint<Rational>;
using QScheme = FatPointScheme<RationalField>;

QPoint qp(long x, long y, long z) { return QPoint(Rational(x), Rational(y), Rational(z)); }

QScheme collinear_nine(int m) {
  std::vector<QPoint> pts;
  for (long i = 0; i < 9; ++i) pts.push_back(qp(i, 0, 1));
  return QScheme::uniform(RationalField(), pts, m);
}

// six points on y = 0, three on x = 10; the lines meet outside X
QScheme six_three(int m) {
  std::vector<QPoint> pts;
  for (long i = 0; i < 6; ++i) pts.push_back(qp(i, 0, 1));
  for (long j = 1; j <= 3; ++j) pts.push_back(qp(10, j, 1));
  return QScheme::uniform(RationalField(), pts, m);
}

template <class Field>
FatPointScheme<Field> random_scheme(const Field& k, Rng& rng, std::size_t n, int m) {
  std::vector<ProjPoint<typename Field::element_type>> pts;
  while (pts.size() < n) {
    ProjPoint<typename Field::element_type> p(k.random(rng), k.random(rng), k.one());
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return FatPointScheme<Field>::uniform(k, pts, m);
}

}  // namespace

TEST(ProjPoint, NormalizesLastNonzero) {
  const QPoint p(Rational(2), Rational(4), Rational(2));
  EXPECT_EQ(p, qp(1, 2, 1));
  EXPECT_EQ(QPoint(Rational(3), Rational(6), Rational(0)), qp(1, 2, 0));
  EXPECT_EQ(p.chart(), 2);
  EXPECT_EQ(qp(5, 0, 0).chart(), 0);
  EXPECT_THROW(qp(0, 0, 0), invalid_geometry);
}

TEST(Scheme, DegreeAndValidation) {
  const QScheme z(RationalField(), {qp(0, 0, 1), qp(1, 0, 1)}, {2, 3});
  EXPECT_EQ(z.degree(), 3 + 6);
  EXPECT_THROW(QScheme(RationalField(), {qp(0, 0, 1), qp(0, 0, 2)}, {1, 1}), invalid_geometry);
  EXPECT_THROW(QScheme(RationalField(), {qp(0, 0, 1)}, {0}), invalid_input);
  EXPECT_THROW(QScheme(RationalField(), {qp(0, 0, 1)}, {1, 1}), invalid_input);
}

TEST(Form, MonomialOrderAndIndex) {
  const auto mons = monomials(2);
  ASSERT_EQ(mons.size(), 6u);
  EXPECT_EQ(mons[0], (Exponent{2, 0, 0}));
  EXPECT_EQ(mons[1], (Exponent{1, 1, 0}));
  EXPECT_EQ(mons[5], (Exponent{0, 0, 2}));
  for (int d = 0; d < 7; ++d) {
    const auto ms = monomials(d);
    for (std::size_t i = 0; i < ms.size(); ++i) EXPECT_EQ(monomial_index(ms[i]), i);
  }
}

TEST(Form, ParseEvaluateDifferentiate) {
  RationalField q;
  auto emb = [&](const Rational& r) { return embed(q, r); };
  const auto f = parse_form(q, "x^2 + y^2 - 3/2*z^2", emb);
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f(std::array<Rational, 3>{Rational(1), Rational(1), Rational(2)}), Rational(-4));
  const auto g = parse_form(q, "2x-y", emb);
  EXPECT_EQ(g.partial(0).coefficients()[0], Rational(2));
  EXPECT_THROW(parse_form(q, "x^2 + y", emb), invalid_input);
  const auto node = parse_form(q, "y^2*z - x^3 - x^2*z", emb);
  EXPECT_TRUE(node.singular_at(qp(0, 0, 1)));
  EXPECT_FALSE(node.singular_at(qp(0, 1, 0)));
}

TEST(Conditions, SimplePointDegreeZero) {
  const QScheme z(RationalField(), {qp(3, 4, 1)}, {1});
  const auto m = conditions_matrix(z, 0);
  ASSERT_EQ(m.rows(), 1u);
  ASSERT_EQ(m.cols(), 1u);
  EXPECT_EQ(m(0, 0), Rational(1));
  EXPECT_EQ(rank(m), 1u);
}

TEST(Conditions, DoublePointInDegreeOne) {
  const QScheme z(RationalField(), {qp(0, 0, 1)}, {2});
  const auto m = conditions_matrix(z, 1);
  EXPECT_EQ(m.rows(), 3u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(rank(m), 3u);
  EXPECT_EQ(ideal_dim(z, 1), 0);
  EXPECT_THROW(conditions_matrix(z, -1), invalid_input);
}

TEST(Conditions, RowsAndColumns) {
  const QScheme z(RationalField(), {qp(1, 2, 1), qp(0, 1, 0), qp(1, 0, 0)}, {3, 2, 1});
  for (int t = 0; t < 6; ++t) {
    const auto m = conditions_matrix(z, t);
    EXPECT_EQ(m.rows(), 10u);
    EXPECT_EQ(m.cols(), monomial_count(t));
  }
}

TEST(Conditions, KernelVanishesToOrder) {
  const QScheme z(RationalField(), {qp(1, 2, 1), qp(3, -1, 1)}, {2, 2});
  const auto basis = ideal_basis(z, 3);
  EXPECT_EQ(static_cast<long>(basis.size()), ideal_dim(z, 3));
  for (const auto& f : basis) {
    for (const auto& p : z.points()) {
      EXPECT_TRUE(f.singular_at(p));
    }
  }
}

TEST(Conditions, NineGenericDoublePointsDegreeSix) {
  Rng rng(1);
  PrimeField k(random_prime(rng));
  const auto z = random_scheme(k, rng, 9, 2);
  const auto m = conditions_matrix(z, 6);
  EXPECT_EQ(m.rows(), 27u);
  EXPECT_EQ(m.cols(), 28u);
  EXPECT_EQ(rank(m), 27u);
  EXPECT_EQ(kernel_basis(m, k.zero(), k.one()).size(), 1u);
  EXPECT_EQ(hilbert_function(z, 6)[6], 27);
  EXPECT_EQ(difference_function(z).to_string(), "1 2 3 4 5 6 6");
}

TEST(IdealDim, Basics) {
  const QScheme empty{RationalField()};
  EXPECT_EQ(ideal_dim(empty, 2), 6);
  EXPECT_EQ(ideal_dim(collinear_nine(1), 1), 1);
}

TEST(Hilbert, SimplePoint) {
  const QScheme z(RationalField(), {qp(0, 0, 1)}, {1});
  EXPECT_EQ(hilbert_function(z, 3).values, (std::vector<long>{1, 1, 1, 1}));
  EXPECT_EQ(difference_function(z).values, (std::vector<long>{1}));
  EXPECT_EQ(regularity(z), 1);
}

TEST(Hilbert, DoublePoint) {
  const QScheme z(RationalField(), {qp(0, 0, 1)}, {2});
  EXPECT_EQ(difference_function(z).to_string(), "1 2");
}

TEST(Hilbert, NineCollinear) {
  EXPECT_EQ(difference_function(collinear_nine(1)).to_string(), "1 1 1 1 1 1 1 1 1");
  EXPECT_EQ(regularity(collinear_nine(1)), 9);
  EXPECT_EQ(difference_function(collinear_nine(2)).to_string(), "1 2 2 2 2 2 2 2 2 2 1 1 1 1 1 1 1 1");
  EXPECT_EQ(regularity(collinear_nine(2)), 18);
}

TEST(Hilbert, SixPlusThreeOnTwoLines) {
  EXPECT_EQ(difference_function(six_three(1)).to_string(), "1 2 2 2 1 1");
  EXPECT_EQ(difference_function(six_three(2)).to_string(), "1 2 3 4 4 4 3 2 1 1 1 1");
}

TEST(Hilbert, DifferenceFunctionOfVectors) {
  EXPECT_EQ(difference_function(HVector::hilbert({1, 1, 1})).values, (std::vector<long>{1}));
  EXPECT_THROW(difference_function(HVector::hilbert({1, 3, 5})), out_of_domain);
  EXPECT_THROW(difference_function(HVector::difference({1, 2})), invalid_input);
  EXPECT_EQ(integrate(HVector::parse("1 2 3"), 5).values, (std::vector<long>{1, 3, 6, 6, 6}));
  EXPECT_THROW(HVector::parse("1 x 2"), invalid_input);
}

TEST(Hilbert, InvariantsOnRandomSchemes) {
  Rng rng(17);
  PrimeField k(random_prime(rng));
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 10);
    std::vector<ProjPoint<ModP>> pts;
    std::vector<int> mults;
    while (pts.size() < n) {
      // bias towards special position: half the points on the line y = 0
      ProjPoint<ModP> p(k.random(rng), uniform_below(rng, 2) ? k.zero() : k.random(rng), k.one());
      if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
      pts.push_back(p);
      mults.push_back(1 + static_cast<int>(uniform_below(rng, 3)));
    }
    const FatPointScheme<PrimeField> z(k, pts, mults);
    const auto h = hilbert_function(z);
    const auto dh = difference_function(h);
    EXPECT_EQ(dh.sum(), z.degree());
    for (std::size_t t = 0; t < dh.size(); ++t) {
      EXPECT_GE(dh[t], 0);
      EXPECT_LE(dh[t], static_cast<long>(t) + 1);
    }
    const auto x = z.reduced();
    EXPECT_LE(regularity(x.doubled()), 2 * regularity(x));
  }
}

TEST(Hilbert, FieldIndependence) {
  Rng rng(23);
  RationalField q(20);
  for (int trial = 0; trial < 4; ++trial) {
    const auto zq = random_scheme(q, rng, 6 + trial, 2);
    const auto dq = difference_function(zq);
    for (int i = 0; i < 3; ++i) {
      PrimeField k(random_prime(rng));
      std::vector<ProjPoint<ModP>> pts;
      for (const auto& p : zq.points()) pts.emplace_back(embed(k, p.x()), embed(k, p.y()), embed(k, p.z()));
      EXPECT_EQ(difference_function(FatPointScheme<PrimeField>::uniform(k, pts, 2)), dq);
    }
  }
}

TEST(PointFile, ReadWriteRoundTrip) {
  const std::string text =
      "# field 1000003\n"
      "# comment\n"
      "\n"
      "0 0 1 2\n"
      "1/2 3 1 1   # trailing\n";
  const auto pf = read_point_file(text);
  ASSERT_TRUE(pf.prime.has_value());
  EXPECT_EQ(*pf.prime, 1000003u);
  ASSERT_EQ(pf.coords.size(), 2u);
  EXPECT_EQ(pf.coords[1][0], Rational(1, 2));
  EXPECT_EQ(pf.mults, (std::vector<int>{2, 1}));
  PrimeField k(*pf.prime);
  const auto z = to_scheme(pf, k);
  std::ostringstream os;
  write_point_file(os, z);
  const auto back = to_scheme(read_point_file(os.str()), k);
  EXPECT_EQ(back.points(), z.points());
  EXPECT_EQ(back.multiplicities(), z.multiplicities());
}

TEST(PointFile, Errors) {
  try {
    read_point_file("0 0 1 1\n1 2 1\n");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(read_point_file("0 0 1 0\n"), parse_error);
  EXPECT_THROW(read_point_file("a 0 1 1\n"), parse_error);
  EXPECT_THROW(read_point_file("# field 12\n"), parse_error);
  EXPECT_THROW(to_scheme(read_point_file("0 0 1 1\n0 0 2 1\n"), RationalField()), invalid_geometry);
  EXPECT_THROW(to_scheme(read_point_file("0 0 0 1\n"), RationalField()), invalid_geometry);
}
