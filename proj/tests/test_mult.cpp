#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "semipart/expr.hpp"
#include "semipart/mult_pieces.hpp"
#include "semipart/sampling.hpp"

using namespace semipart;

TEST(AtomProduct, Examples) {
  EXPECT_EQ(atom_product(Atom::PosSmall, Atom::PosSmall), PieceSet{Atom::PosSmall});
  EXPECT_EQ(atom_product(Atom::NegOne, Atom::NegOne), PieceSet{Atom::PosOne});
  EXPECT_EQ(atom_product(Atom::PosSmall, Atom::PosBig), (PieceSet{Atom::PosSmall, Atom::PosOne, Atom::PosBig}));
  EXPECT_EQ(atom_product(Atom::NegBig, Atom::NegBig), PieceSet{Atom::PosBig});
}

TEST(AtomProduct, MatchesIntervalMultiplicationOracle) {
  int entries = 0;
  for (Atom a : kAtoms)
    for (Atom b : kAtoms) {
      EXPECT_EQ(atom_product(a, b), oracle::atom_product_by_intervals(a, b)) << atom_name(a) << '*' << atom_name(b);
      ++entries;
    }
  EXPECT_EQ(entries, 49);
}

TEST(AtomProduct, Laws) {
  for (Atom a : kAtoms) {
    EXPECT_EQ(atom_product(Atom::PosOne, a), PieceSet{a});
    EXPECT_EQ(atom_product(a, Atom::PosOne), PieceSet{a});
    EXPECT_EQ(atom_product(Atom::Zero, a), kZero);
    for (Atom b : kAtoms) EXPECT_EQ(atom_product(a, b), atom_product(b, a));
  }
}

TEST(ProductSet, Examples) {
  EXPECT_TRUE(product_set({}, kBig).empty());
  EXPECT_EQ(product_set({Atom::PosOne}, kSmall | kZero), kSmall | kZero);
  const PieceSet all_but_zero = kSmall | kBig | kUnits;
  EXPECT_EQ(product_set(kSmall, kBig), all_but_zero);
  EXPECT_EQ(product_set(kZero, kBig | kUnits), kZero);
}

TEST(Closure, Examples) {
  EXPECT_FALSE(is_mult_closed(kSmall | kBig));
  EXPECT_FALSE(is_mult_closed({Atom::NegBig}));
  EXPECT_TRUE(is_triple_mult_closed({Atom::NegBig}));
  EXPECT_TRUE(is_mult_closed(PieceSet::everything()));
}

TEST(Enumeration, TenSetsInListedOrder) {
  const auto sets = enumerate_closed_generator_unions();
  ASSERT_EQ(sets.size(), 10U);
  const std::vector<PieceSet> expected{kSmall,
                                       kSmall | kUnits,
                                       kSmall | kZero,
                                       kSmall | kUnits | kZero,
                                       kBig,
                                       kBig | kUnits,
                                       kBig | kZero,
                                       kBig | kUnits | kZero,
                                       kSmall | kBig | kUnits,
                                       kSmall | kBig | kUnits | kZero};
  EXPECT_EQ(sets, expected);
  EXPECT_NE(std::find(sets.begin(), sets.end(), kBig | kZero), sets.end());
  EXPECT_EQ(std::find(sets.begin(), sets.end(), kSmall | kBig), sets.end());
}

TEST(Enumeration, IntervalFormsMatchTheWrittenList) {
  // The ten sets as printed subsets of the line, in the same order as the
  // written list except that the last two are swapped.
  const std::vector<std::string> written{"(-1,0) u (0,1)",
                                         "[-1,0) u (0,1]",
                                         "(-1,1)",
                                         "[-1,1]",
                                         "(-inf,-1) u (1,inf)",
                                         "(-inf,-1] u [1,inf)",
                                         "(-inf,-1) u [0,0] u (1,inf)",
                                         "(-inf,-1] u [0,0] u [1,inf)",
                                         "(-inf,0) u (0,inf)",
                                         "(-inf,inf)"};
  std::vector<std::string> got;
  for (PieceSet s : enumerate_closed_generator_unions()) got.push_back(as_interval_union(s).to_string());
  EXPECT_EQ(got, written);
}

TEST(Enumeration, ExcludedSetsFailForAReason) {
  const auto masks = closed_generator_masks();
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (std::find(masks.begin(), masks.end(), mask) != masks.end()) continue;
    const PieceSet s = generator_union(mask);
    EXPECT_TRUE(!is_mult_closed(s) || !(s.intersects(kSmall) || s.intersects(kBig))) << generator_union_name(mask);
  }
}

TEST(NegLog, OnlyBigNegatives) {
  const LogImage img = neg_log_atom(Atom::NegBig);
  EXPECT_EQ(img.image, parse_interval_union("(0,inf)"));
  EXPECT_EQ(img.closure_order, 3U);
  EXPECT_THROW(neg_log_atom(Atom::NegSmall), DomainError);
  EXPECT_THROW(neg_log_atom(Atom::Zero), DomainError);
}

TEST(Bridge, Examples) {
  EXPECT_EQ(mult_classify(PosRealExp{}), Label::zero());
  const HamelReal x = parse_real("2*b(1,1) - 1*b(0,)");
  const PosRealExp u{x};
  EXPECT_EQ(mult_classify(u), Label::pos(1, 1));
  EXPECT_EQ(mult_classify(u.inverse()), Label::neg(1, 1));
  EXPECT_EQ(mult_classify(u * PosRealExp{parse_real("1/2*b(1,)")}), Label::pos(1, 1));
}

TEST(Bridge, ProductFirstOrExponentsFirst) {
  SampleConfig cfg;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = Rng::for_sample(13, i);
    const PosRealExp u{random_real(rng, cfg)}, v{random_real(rng, cfg)};
    ASSERT_EQ(mult_classify(u * v), classify(u.exponent + v.exponent));
    ASSERT_EQ(u * v, v * u);
  }
}

TEST(PieceSetText, Parse) {
  EXPECT_EQ(parse_piece_set("I1,P"), kSmall | kUnits);
  EXPECT_EQ(parse_piece_set("nbig, pone"), (PieceSet{Atom::NegBig, Atom::PosOne}));
  EXPECT_EQ(parse_piece_set("all"), PieceSet::everything());
  EXPECT_TRUE(parse_piece_set("empty").empty());
  EXPECT_THROW(parse_piece_set("huge"), ParseError);
  EXPECT_EQ(to_string(kSmall | kZero), "nsmall,zero,psmall");
}
