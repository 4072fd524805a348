#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>
#include <stdexcept>

#include "normplane/constants.hpp"
#include "normplane/exact.hpp"
#include "support/expect_error.hpp"
#include "support/test_norms.hpp"

namespace normplane::exact {
namespace {

using testing::hexagon_exact;
using testing::square_exact;

Rational q(long n, long d = 1) {
  Rational r{mpz_class(n), mpz_class(d)};
  r.canonicalize();
  return r;
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("22/13"), q(22, 13));
  EXPECT_EQ(parse_rational("-4/6"), q(-2, 3));
  EXPECT_EQ(parse_rational("+7"), q(7));
  EXPECT_EQ(parse_rational(" 0.25 "), q(1, 4));
  EXPECT_EQ(parse_rational("-1.5"), q(-3, 2));
  EXPECT_EQ(parse_rational(".5"), q(1, 2));
  EXPECT_EQ(parse_rational("3."), q(3));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational(mpz_class("123456789012345678901234567890")));
}

TEST(ParseRational, Rejects) {
  for (const char* bad : {"", "-", "1/0", "a", "1/2/3", "1e5", "1/-2", "1.2.3", ".", "0x10", "1 /2"}) {
    EXPECT_ERROR_CODE(parse_rational(bad), ErrorCode::kParse);
  }
}

TEST(ParseRational, LowestTerms) {
  const Rational r = parse_rational("-12/18");
  EXPECT_EQ(r.get_num(), -2);
  EXPECT_EQ(r.get_den(), 3);
  EXPECT_EQ(parse_rational("0/5").get_den(), 1);
}

TEST(ToString, Forms) {
  EXPECT_EQ(to_string(q(22, 13)), "22/13");
  EXPECT_EQ(to_string(q(4, 2)), "2");
  EXPECT_EQ(to_string(q(-2, 7)), "-2/7");
  EXPECT_EQ(to_string(RationalVec2{q(9, 13), q(21, 13)}), "(9/13, 21/13)");
}

TEST(RationalPolygon, ValidationIsExact) {
  // Collinear triple that float rounding could hide: (1,0), (1, 1/3), (1, 2/3).
  EXPECT_ERROR_CODE(RationalPolygon::from_vertices({{q(1), q(0)}, {q(1), q(1, 3)}, {q(1), q(2, 3)}}),
                    ErrorCode::kNonConvex);
  EXPECT_ERROR_CODE(RationalPolygon::from_vertices({{q(1, 3), q(1, 7)}, {q(2, 3), q(2, 7)}}),
                    ErrorCode::kDuplicateDirection);
  EXPECT_ERROR_CODE(RationalPolygon::from_vertices({{q(0), q(0)}, {q(1), q(0)}}), ErrorCode::kZeroVertex);
  EXPECT_ERROR_CODE(RationalPolygon::from_vertices({{q(1), q(0)}}), ErrorCode::kTooFewVertices);
}

TEST(ExactGauge, Examples) {
  const auto hex = hexagon_exact();
  EXPECT_EQ(exact_gauge(hex, {q(22, 13), q(8, 13)}), q(22, 13));
  EXPECT_EQ(exact_gauge(hex, {q(3, 2), q(12, 7)}), q(11, 7));
  EXPECT_EQ(exact_gauge(hex, {q(12, 17), q(42, 17)}), q(22, 17));
  EXPECT_EQ(exact_gauge(hex, {q(0), q(-2)}), q(6, 5));
  EXPECT_EQ(exact_gauge(hex, {q(0), q(0)}), q(0));
  const auto sq = square_exact();
  for (const Rational& t : {q(-1), q(-2, 3), q(0), q(1, 7), q(1)}) EXPECT_EQ(exact_gauge(sq, {q(1), t}), q(1));
}

TEST(ExactGauge, SymmetricAndOneOnVertices) {
  testing::RandomPolygons gen(5);
  for (int i = 0; i < 30; ++i) {
    const auto poly = gen.next();
    for (const auto& v : poly.full_cycle()) EXPECT_EQ(exact_gauge(poly, v), 1);
    const RationalVec2 v{q(3, 7), q(-5, 11)};
    EXPECT_EQ(exact_gauge(poly, -v), exact_gauge(poly, v));
  }
}

TEST(ExactPartner, Examples) {
  const auto hex = hexagon_exact();
  EXPECT_EQ(exact_iso_partner(hex, {q(1), q(-1)}), (RationalVec2{q(9, 13), q(21, 13)}));
  EXPECT_EQ(exact_iso_partner(hex, {q(1), q(1)}), (RationalVec2{q(-5, 17), q(25, 17)}));
  EXPECT_EQ(exact_iso_partner(hex, {q(1, 2), q(2)}), (RationalVec2{q(-1), q(2, 7)}));
  EXPECT_EQ(exact_iso_partner(square_exact(), {q(1), q(0)}), (RationalVec2{q(0), q(1)}));
}

TEST(ExactPartner, RequiresUnitVector) {
  EXPECT_ERROR_CODE(exact_iso_partner(hexagon_exact(), {q(2), q(-2)}), ErrorCode::kNotOnSphere);
}

TEST(ExactBeta, Examples) {
  const auto hex = hexagon_exact();
  EXPECT_EQ(exact_beta(hex, {q(1), q(-1)}), q(22, 13));
  EXPECT_EQ(exact_beta(hex, {q(1), q(1)}), q(22, 17));
  EXPECT_EQ(exact_beta(hex, {q(1, 2), q(2)}), q(11, 7));
  EXPECT_EQ(exact_beta(square_exact(), {q(1), q(1)}), q(2));
}

TEST(ExactJames, Examples) {
  EXPECT_EQ(exact_james(hexagon_exact()), q(22, 13));
  EXPECT_EQ(exact_james(square_exact()), q(2));
}

TEST(ExactJames, RationalOctagonNearSqrt2) {
  // sqrt(2) ~ 99/70, so the vertex (1, sqrt(2) - 1) becomes (1, 29/70).
  const Rational g = q(29, 70);
  const auto oct = RationalPolygon::from_vertices({{q(1), g}, {g, q(1)}, {-g, q(1)}, {q(-1), g}});
  const Rational j = exact_james(oct);
  const auto float_norm = NormModel::polygon(oct.to_float());
  EXPECT_NEAR(j.get_d(), james(float_norm), 1e-12);
  // The perturbation moves each vertex by less than 1e-4, so J moves by O(1e-4).
  EXPECT_NEAR(j.get_d(), std::numbers::sqrt2, 1e-3);
  EXPECT_NEAR(j.get_d(), james(NormModel::octagon_max()), 1e-3);
}

TEST(ExactJames, AttainmentPairs) {
  const auto pairs = exact_james_attainment(hexagon_exact());
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].value, q(22, 13));
  EXPECT_EQ(pairs[0].iso_defect, 0);
  EXPECT_EQ(to_string(pairs[0].x), "(-1, 1)");
  EXPECT_EQ(to_string(pairs[0].y), "(-9/13, -21/13)");
}

class ExactRandom : public ::testing::Test {
 protected:
  testing::RandomPolygons gen{31337};
};

TEST_F(ExactRandom, TwoRootsExactAndOrthogonal) {
  for (int i = 0; i < 40; ++i) {
    const auto poly = gen.next();
    for (const auto& v : poly.full_cycle()) {
      const auto roots = exact_partner_roots(poly, v);
      ASSERT_EQ(roots.size(), 2u);
      EXPECT_EQ(roots[0], -roots[1]);
      const auto y = exact_iso_partner(poly, v);
      EXPECT_EQ(exact_gauge(poly, y), 1);
      EXPECT_EQ(exact_gauge(poly, v + y), exact_gauge(poly, v - y));
      EXPECT_GT(cross(v, y), 0);
    }
  }
}

TEST_F(ExactRandom, EdgeMidpointsHaveTwoRoots) {
  for (int i = 0; i < 20; ++i) {
    const auto poly = gen.next();
    const auto& w = poly.full_cycle();
    for (std::size_t k = 0; k < w.size(); ++k) {
      const RationalVec2 m = q(1, 3) * w[k] + q(2, 3) * w[(k + 1) % w.size()];
      EXPECT_EQ(exact_partner_roots(poly, m).size(), 2u);
    }
  }
}

TEST_F(ExactRandom, JamesBounds) {
  for (int i = 0; i < 40; ++i) {
    const Rational j = exact_james(gen.next());
    EXPECT_GE(j * j, 2);
    EXPECT_LE(j, 2);
  }
}

TEST_F(ExactRandom, AgreesWithFloat) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 30);
  for (int i = 0; i < 20; ++i) {
    const auto poly = gen.next();
    const auto fl = NormModel::polygon(poly.to_float());
    EXPECT_NEAR(exact_james(poly).get_d(), james(fl), 1e-9);
    for (int k = 0; k < 50; ++k) {
      const RationalVec2 v{q(num(gen.rng()), den(gen.rng())), q(num(gen.rng()), den(gen.rng()))};
      const double e = exact_gauge(poly, v).get_d();
      EXPECT_NEAR(fl.gauge(to_float(v)), e, 1e-12 * e);
    }
    for (const auto& v : poly.half_vertices()) {
      const Vec2 ey = to_float(exact_iso_partner(poly, v));
      const Vec2 fy = iso_partner(fl, to_float(v), 1.0).primary;
      EXPECT_NEAR(fy.x, ey.x, 1e-9);
      EXPECT_NEAR(fy.y, ey.y, 1e-9);
    }
  }
}

TEST_F(ExactRandom, JamesInvariantUnderRelabeling) {
  for (int i = 0; i < 20; ++i) {
    const auto poly = gen.next();
    std::vector<RationalVec2> relabeled(poly.half_vertices().begin(), poly.half_vertices().end());
    std::shuffle(relabeled.begin(), relabeled.end(), gen.rng());
    for (auto& v : relabeled) {
      if (gen.rng()() % 2) v = -v;
    }
    EXPECT_EQ(exact_james(RationalPolygon::from_vertices(relabeled)), exact_james(poly));
  }
}

TEST_F(ExactRandom, JamesInvariantUnderRationalRotation) {
  for (int i = 0; i < 20; ++i) {
    const auto poly = gen.next();
    std::vector<RationalVec2> rotated;
    for (const auto& v : poly.half_vertices()) {
      rotated.push_back({q(3, 5) * v.x - q(4, 5) * v.y, q(4, 5) * v.x + q(3, 5) * v.y});
    }
    EXPECT_EQ(exact_james(RationalPolygon::from_vertices(rotated)), exact_james(poly));
  }
}

TEST_F(ExactRandom, AttainmentDefectIsExactlyZero) {
  for (int i = 0; i < 40; ++i) {
    const auto poly = gen.next();
    const auto pairs = exact_james_attainment(poly);
    ASSERT_FALSE(pairs.empty());
    for (const auto& p : pairs) {
      EXPECT_EQ(p.iso_defect, 0);
      EXPECT_EQ(p.value, exact_james(poly));
    }
  }
}

}  // namespace
}  // namespace normplane::exact
