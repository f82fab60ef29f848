#include <gtest/gtest.h>

#include "oracles.hpp"
#include "semipart/hamel.hpp"
#include "semipart/sampling.hpp"

using namespace semipart;

namespace {

HamelReal r(std::vector<std::pair<BasisElement, Rational>> pairs) { return HamelReal::make(pairs); }

}  // namespace

TEST(HamelMake, EmptyIsZero) {
  EXPECT_TRUE(r({}).is_zero());
  EXPECT_EQ(to_string(r({})), "0");
}

TEST(HamelMake, CancellationDropsTerm) {
  EXPECT_TRUE(r({{basis(0, ""), 1}, {basis(0, ""), -1}}).is_zero());
}

TEST(HamelMake, RepeatedElementsMerge) {
  const HamelReal x = r({{basis(2, "01"), Rational(1, 2)}, {basis(2, "01"), Rational(1, 3)}});
  ASSERT_EQ(x.size(), 1U);
  EXPECT_EQ(x.coeff(basis(2, "01")), Rational(5, 6));
}

TEST(HamelMake, RejectsNonCanonicalPoint) {
  EXPECT_THROW(basis(0, "10"), DomainError);
  EXPECT_THROW(r({{BasisElement{0, "10"}, 1}}), DomainError);
  EXPECT_THROW(basis(0, "2"), DomainError);
  EXPECT_THROW(basis(0, std::string(kMaxPointLength + 1, '1')), DomainError);
  EXPECT_NO_THROW(basis(0, std::string(kMaxPointLength, '1')));
}

TEST(HamelAdd, Componentwise) {
  const HamelReal x = r({{basis(0, ""), 1}});
  const HamelReal y = r({{basis(0, ""), 2}, {basis(1, "1"), 1}});
  EXPECT_EQ(add(x, y), r({{basis(0, ""), 3}, {basis(1, "1"), 1}}));
  EXPECT_EQ(add(x, HamelReal{}), x);
  EXPECT_TRUE(add(x, scale(-1, x)).is_zero());
}

TEST(HamelScale, Examples) {
  const HamelReal x = r({{basis(4, "011"), Rational(3, 2)}});
  EXPECT_EQ(scale(1, x), x);
  EXPECT_TRUE(scale(0, x).is_zero());
  EXPECT_EQ(scale(2, x), r({{basis(4, "011"), 3}}));
}

TEST(HamelSupport, Examples) {
  EXPECT_TRUE(support(HamelReal{}).empty());
  const HamelReal x = r({{basis(1, "1"), 5}});
  EXPECT_EQ(support(x), std::set<BasisElement>{basis(1, "1")});
  EXPECT_EQ(support(scale(Rational(-2, 7), x)), support(x));
}

TEST(HamelMaxIndex, Examples) {
  EXPECT_EQ(max_index(r({{basis(0, ""), 1}})), 0U);
  EXPECT_EQ(max_index(r({{basis(3, "1"), 1}, {basis(7, "01"), -2}})), 7U);
  EXPECT_THROW(max_index(HamelReal{}), DomainError);
}

TEST(HamelCoeffSum, Examples) {
  EXPECT_EQ(coeff_sum(HamelReal{}, Cylinder{0, 1}), 0);
  const HamelReal x = r({{basis(0, "01"), 2}, {basis(0, "1"), 3}});
  EXPECT_EQ(coeff_sum(x, Cylinder{0, 1}), 5);
  EXPECT_EQ(coeff_sum(x, Cylinder{0, 2}), 2);  // "0"
  EXPECT_EQ(coeff_sum(x, Cylinder{0, 3}), 3);  // "1"
  EXPECT_EQ(coeff_sum(x, Cylinder{1, 1}), 0);  // other piece

  const HamelReal a = r({{basis(0, ""), 1}});
  const HamelReal b = r({{basis(0, ""), -1}});
  EXPECT_EQ(coeff_sum(add(a, b), Cylinder{0, 1}), coeff_sum(a, Cylinder{0, 1}) + coeff_sum(b, Cylinder{0, 1}));
  EXPECT_EQ(coeff_sum(add(a, b), Cylinder{0, 1}), 0);
}

TEST(Cylinders, LengthLexOrder) {
  EXPECT_EQ(cylinder_string(1), "");
  EXPECT_EQ(cylinder_string(2), "0");
  EXPECT_EQ(cylinder_string(3), "1");
  EXPECT_EQ(cylinder_string(4), "00");
  EXPECT_EQ(cylinder_string(6), "10");
  for (CylinderIndex k = 1; k < 5000; ++k) {
    EXPECT_EQ(cylinder_string(k), oracle::nth_string(k));
    EXPECT_EQ(lex_index(cylinder_string(k)), k);
  }
}

TEST(Cylinders, Containment) {
  EXPECT_TRUE(cylinder_contains("01", lex_index("0")));
  EXPECT_TRUE(cylinder_contains("1", lex_index("10")));
  EXPECT_TRUE(cylinder_contains("1", lex_index("1000")));
  EXPECT_FALSE(cylinder_contains("1", lex_index("11")));
  EXPECT_TRUE(cylinder_contains("", lex_index("000")));
  EXPECT_FALSE(cylinder_contains("", lex_index("001")));
  for (const std::string p : {"", "1", "01", "11", "0101", "1001"})
    for (CylinderIndex k = 1; k < 300; ++k)
      EXPECT_EQ(cylinder_contains(p, k), oracle::point_in(p, oracle::nth_string(k))) << p << ' ' << k;
}

TEST(Cylinders, SeparationWithinBoundExhaustive) {
  // All sets of up to three distinct canonical points of length <= 4.
  std::vector<std::string> pts{""};
  for (std::uint64_t k = 2; k < 32; ++k) {
    const std::string s = oracle::nth_string(k);
    if (is_canonical_point(s)) pts.push_back(s);
  }
  std::size_t sets = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j)
      for (std::size_t l = j; l < pts.size(); ++l) {
        std::vector<std::string> set{pts[i]};
        if (j != i) set.push_back(pts[j]);
        if (l != j) set.push_back(pts[l]);
        const CylinderIndex bound = lex_index_bound(set);
        bool found = false;
        for (CylinderIndex k = 1; k <= bound && !found; ++k) {
          int hits = 0;
          for (const auto& p : set) hits += oracle::point_in(p, oracle::nth_string(k)) ? 1 : 0;
          found = hits == 1;
        }
        EXPECT_TRUE(found);
        ++sets;
      }
  EXPECT_EQ(sets, 816U);
}

TEST(HamelText, CanonicalPrinting) {
  const HamelReal x = r({{basis(2, "01"), Rational(-1, 3)}, {basis(0, ""), 2}});
  EXPECT_EQ(to_string(x), "2*b(0,) - 1/3*b(2,01)");
  EXPECT_EQ(to_string(r({{basis(1, "1"), -4}})), "-4*b(1,1)");
}

TEST(HamelProperties, VectorSpaceAxiomsOnSamples) {
  SampleConfig cfg;
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng = Rng::for_sample(77, i);
    const HamelReal x = random_real(rng, cfg), y = random_real(rng, cfg), z = random_real(rng, cfg);
    const Rational p = random_rational(rng, 50), q = random_rational(rng, 50);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(p * (x + y), p * x + p * y);
    ASSERT_EQ(Rational(p + q) * x, p * x + q * x);
    ASSERT_TRUE((x + y).is_canonical());
    ASSERT_EQ(make_real({x.terms().begin(), x.terms().end()}), x);
    for (CylinderIndex k = 1; k <= 32; ++k)
      for (PieceIndex a = 0; a <= cfg.max_index; a += 5)
        ASSERT_EQ(coeff_sum(x + y, Cylinder{a, k}), coeff_sum(x, Cylinder{a, k}) + coeff_sum(y, Cylinder{a, k}));
  }
}

TEST(Sampling, StreamsAreReproducible) {
  SampleConfig cfg;
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng a = Rng::for_sample(9, i), b = Rng::for_sample(9, i);
    EXPECT_EQ(random_real(a, cfg), random_real(b, cfg));
  }
  Rng a = Rng::for_sample(9, 0), b = Rng::for_sample(10, 0);
  EXPECT_NE(a.next(), b.next());
}

TEST(Sampling, RespectsBounds) {
  SampleConfig cfg;
  cfg.max_terms = 3;
  cfg.max_index = 4;
  cfg.max_point_len = 2;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = Rng::for_sample(3, i);
    const HamelReal x = random_real(rng, cfg);
    for (const auto& [b, q] : x.terms()) {
      EXPECT_LE(b.piece, cfg.max_index);
      EXPECT_LE(b.point.size(), cfg.max_point_len);
    }
  }
  SampleConfig bad;
  bad.max_point_len = kMaxPointLength + 1;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}
