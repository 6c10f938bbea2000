#include <gtest/gtest.h>

#include <set>

#include "ppm/classify.hpp"
#include "ppm/oracle.hpp"

using namespace ppm;
using Values = std::set<int32_t>;

namespace {

const Permutation kTauF1 = parse_permutation("3 1 2 4 5 9 6 7 10 8 11 13 12");
const Permutation kPiF3 = parse_permutation("1734256");
const Permutation kTauF3 = parse_permutation("10 1 9 3 5 4 6 2 7 8");

Values rigid_values(const Permutation& p, const Labels321& l, RigidType t) {
  Values out;
  for (int32_t i = 1; i <= p.size(); ++i) {
    if (l.type(i) == t) out.insert(p.value(i));
  }
  return out;
}

Values corner_values(const Permutation& p, const SkewLabels& l, Corner c) {
  Values out;
  for (int32_t pos : l.positions_of(c)) out.insert(p.value(pos));
  return out;
}

int32_t value_of(const Permutation& p, MaybeElement x) { return x ? p.value(*x) : 0; }

std::vector<Permutation> all_of_size(int32_t n) { return oracle::enumerate_avoiders(oracle::PermClass::Any, n); }

}  // namespace

TEST(Rigid321, FigureOneLabels) {
  const Labels321 l = label_rigid_321(kTauF1);
  EXPECT_TRUE(l.is_avoider());
  EXPECT_EQ(rigid_values(kTauF1, l, RigidType::Upper), (Values{3, 9, 10, 13}));
  EXPECT_EQ(rigid_values(kTauF1, l, RigidType::Lower), (Values{1, 2, 6, 7, 8, 12}));
  EXPECT_EQ(rigid_values(kTauF1, l, RigidType::Fluid), (Values{4, 5, 11}));
}

TEST(Rigid321, SmallLabels) {
  const Permutation p = parse_permutation("31254");
  const Labels321 l = label_rigid_321(p);
  EXPECT_TRUE(l.is_avoider());
  EXPECT_EQ(rigid_values(p, l, RigidType::Upper), (Values{3, 5}));
  EXPECT_EQ(rigid_values(p, l, RigidType::Lower), (Values{1, 2, 4}));
  EXPECT_TRUE(rigid_values(p, l, RigidType::Fluid).empty());
  EXPECT_FALSE(label_rigid_321(parse_permutation("321")).is_avoider());
}

TEST(Rigid321, TypedNext) {
  const Labels321 l = label_rigid_321(kTauF1);
  EXPECT_EQ(value_of(kTauF1, typed_next_321(l, kTauF1.at_value(1), Direction::Right, RigidType::Upper)), 9);
  EXPECT_EQ(value_of(kTauF1, typed_next_321(l, kTauF1.at_value(3), Direction::Up, RigidType::Lower)), 6);
  EXPECT_FALSE(typed_next_321(l, kTauF1.at_value(13), Direction::Right, RigidType::Upper));
  EXPECT_FALSE(typed_next_321(l, std::nullopt, Direction::Right, RigidType::Upper));
}

// The typed tables must agree with a direct scan in every direction.
TEST(Rigid321, TypedNextMatchesScanExhaustive) {
  for (int32_t n = 1; n <= 7; ++n) {
    for (const auto& p : oracle::enumerate_avoiders(oracle::PermClass::Av321, n)) {
      const Labels321 l = label_rigid_321(p);
      for (int32_t i = 1; i <= n; ++i) {
        for (auto t : {RigidType::Upper, RigidType::Lower}) {
          int32_t right = 0, left = 0, up = 0, down = 0;
          for (int32_t j = i + 1; j <= n && right == 0; ++j) right = l.type(j) == t ? j : 0;
          for (int32_t j = i - 1; j >= 1 && left == 0; --j) left = l.type(j) == t ? j : 0;
          for (int32_t v = p.value(i) + 1; v <= n && up == 0; ++v) up = l.type(p.position(v)) == t ? p.position(v) : 0;
          for (int32_t v = p.value(i) - 1; v >= 1 && down == 0; --v) {
            down = l.type(p.position(v)) == t ? p.position(v) : 0;
          }
          auto pos = [](MaybeElement x) { return x ? x->pos : 0; };
          EXPECT_EQ(pos(l.next(Element{i}, Direction::Right, t)), right);
          EXPECT_EQ(pos(l.next(Element{i}, Direction::Left, t)), left);
          EXPECT_EQ(pos(l.next(Element{i}, Direction::Up, t)), up);
          EXPECT_EQ(pos(l.next(Element{i}, Direction::Down, t)), down);
        }
      }
    }
  }
}

TEST(Rigid321, AgreesWithDefinitionExhaustive) {
  for (int32_t n = 0; n <= 7; ++n) {
    for (const auto& p : all_of_size(n)) {
      const Labels321 l = label_rigid_321(p);
      ASSERT_EQ(l.is_avoider(), oracle::brute_in_class(p, oracle::PermClass::Av321)) << format_permutation(p);
      if (!l.is_avoider()) continue;
      const auto truth = oracle::brute_labels_321(p);
      for (int32_t i = 1; i <= n; ++i) ASSERT_EQ(l.type(i), truth.type(i)) << format_permutation(p);
    }
  }
}

TEST(Blocks, FigureOne) {
  const auto d = block_decomposition(kTauF1, label_rigid_321(kTauF1));
  std::vector<std::string> patterns;
  for (const auto& b : d.blocks) patterns.push_back(format_permutation(b.pattern));
  EXPECT_EQ(patterns, (std::vector<std::string>{"3 1 2", "1", "1", "4 1 2 5 3", "1", "2 1"}));
  EXPECT_EQ(d.blocks[3].kind, Block::Kind::Rigid);
  EXPECT_EQ(d.blocks[1].kind, Block::Kind::Singleton);
}

TEST(Blocks, TrivialCases) {
  const Permutation id = parse_permutation("123");
  EXPECT_EQ(block_decomposition(id, label_rigid_321(id)).blocks.size(), 3u);
  const Permutation p = parse_permutation("21");
  const auto d = block_decomposition(p, label_rigid_321(p));
  ASSERT_EQ(d.blocks.size(), 1u);
  EXPECT_EQ(d.blocks[0].kind, Block::Kind::Rigid);
}

// Direct sum of the blocks rebuilds the permutation, and no two rigid blocks are adjacent.
TEST(Blocks, ReassembleExhaustive) {
  for (int32_t n = 0; n <= 8; ++n) {
    for (const auto& p : oracle::enumerate_avoiders(oracle::PermClass::Av321, n)) {
      const auto d = block_decomposition(p, label_rigid_321(p));
      std::vector<Permutation> parts;
      for (size_t i = 0; i < d.blocks.size(); ++i) {
        parts.push_back(d.blocks[i].pattern);
        if (i > 0) {
          EXPECT_FALSE(d.blocks[i].kind == Block::Kind::Rigid && d.blocks[i - 1].kind == Block::Kind::Rigid);
          EXPECT_EQ(d.blocks[i].first, d.blocks[i - 1].last + 1);
        }
        if (d.blocks[i].kind == Block::Kind::Singleton) EXPECT_EQ(d.blocks[i].size(), 1);
      }
      EXPECT_EQ(direct_sum(parts), p);
    }
  }
}

TEST(Skew, FigureThreePattern) {
  const SkewLabels l = label_skew(kPiF3);
  ASSERT_TRUE(l.is_skew_merged());
  EXPECT_EQ(corner_values(kPiF3, l, Corner::SW), (Values{1}));
  EXPECT_EQ(corner_values(kPiF3, l, Corner::NW), (Values{7}));
  EXPECT_EQ(corner_values(kPiF3, l, Corner::SE), (Values{2}));
  EXPECT_EQ(corner_values(kPiF3, l, Corner::NE), (Values{5, 6}));
  EXPECT_EQ(corner_values(kPiF3, l, Corner::Central), (Values{3, 4}));
  EXPECT_EQ(l.center_direction(), CenterDirection::Increasing);
}

TEST(Skew, FigureThreeText) {
  const SkewLabels l = label_skew(kTauF3);
  ASSERT_TRUE(l.is_skew_merged());
  EXPECT_EQ(corner_values(kTauF3, l, Corner::NW), (Values{10, 9}));
  EXPECT_EQ(corner_values(kTauF3, l, Corner::SW), (Values{1, 3}));
  EXPECT_EQ(corner_values(kTauF3, l, Corner::SE), (Values{2}));
  EXPECT_EQ(corner_values(kTauF3, l, Corner::NE), (Values{6, 7, 8}));
  EXPECT_EQ(corner_values(kTauF3, l, Corner::Central), (Values{5, 4}));
  EXPECT_EQ(l.center_direction(), CenterDirection::Decreasing);
  EXPECT_FALSE(label_skew(parse_permutation("2143")).is_skew_merged());
  EXPECT_FALSE(label_skew(parse_permutation("3412")).is_skew_merged());
}

TEST(Skew, StepsAndSeeks) {
  const SkewLabels l = label_skew(kPiF3);
  const MaybeElement seven = kPiF3.at_value(7);
  EXPECT_EQ(value_of(kPiF3, l.step(kPiF3, seven, SkewStep::OuterH)), 1);
  EXPECT_FALSE(l.step(kPiF3, seven, SkewStep::InnerH));
  EXPECT_EQ(value_of(kPiF3, l.step(kPiF3, seven, SkewStep::InnerV)), 6);
  EXPECT_FALSE(l.step(kPiF3, seven, SkewStep::OuterV));

  const MaybeElement five = kPiF3.at_value(5);
  EXPECT_EQ(value_of(kPiF3, typed_seek_skew(l, five, SkewStep::OuterV, Corner::NW)), 7);
  EXPECT_EQ(value_of(kPiF3, typed_seek_skew(l, five, SkewStep::OuterV, Corner::NE)), 6);
  EXPECT_FALSE(typed_seek_skew(l, five, SkewStep::OuterH, Corner::SE));
  EXPECT_FALSE(typed_seek_skew(l, five, SkewStep::InnerV, Corner::SE));

  const SkewLabels tl = label_skew(kTauF3);
  EXPECT_EQ(value_of(kTauF3, typed_seek_skew(tl, kTauF3.at_value(10), SkewStep::InnerV, Corner::NE)), 8);
  EXPECT_FALSE(typed_seek_skew(tl, std::nullopt, SkewStep::InnerV, Corner::NE));
}

TEST(Skew, AgreesWithDefinitionExhaustive) {
  for (int32_t n = 0; n <= 7; ++n) {
    for (const auto& p : all_of_size(n)) {
      const SkewLabels l = label_skew(p);
      ASSERT_EQ(l.is_skew_merged(), oracle::brute_in_class(p, oracle::PermClass::Skew)) << format_permutation(p);
      if (!l.is_skew_merged()) continue;
      const auto truth = oracle::brute_labels_skew(p);
      for (int32_t i = 1; i <= n; ++i) ASSERT_EQ(l.type(i), truth.type(i)) << format_permutation(p);
    }
  }
}

// Central elements are monotone, and region boundaries split positions and values as documented.
TEST(Skew, StructureExhaustive) {
  for (int32_t n = 0; n <= 8; ++n) {
    for (const auto& p : oracle::enumerate_avoiders(oracle::PermClass::Skew, n)) {
      const SkewLabels l = label_skew(p);
      ASSERT_TRUE(l.is_skew_merged());
      const auto central = l.positions_of(Corner::Central);
      bool inc = true, dec = true;
      for (size_t i = 1; i < central.size(); ++i) {
        inc = inc && p.value(central[i]) > p.value(central[i - 1]);
        dec = dec && p.value(central[i]) < p.value(central[i - 1]);
      }
      switch (l.center_direction()) {
        case CenterDirection::Increasing: EXPECT_TRUE(inc && central.size() > 1); break;
        case CenterDirection::Decreasing: EXPECT_TRUE(dec && central.size() > 1); break;
        case CenterDirection::Trivial: EXPECT_LE(central.size(), 1u); break;
      }
      int32_t total = 0;
      for (int32_t i = 1; i <= n; ++i) {
        const Corner c = l.type(i);
        if (c == Corner::Central) {
          EXPECT_TRUE(i > l.west_end() && i < l.east_begin());
          continue;
        }
        EXPECT_EQ(is_west(c), i <= l.west_end());
        EXPECT_EQ(is_north(c), p.value(i) >= l.north_bottom());
      }
      for (Corner c : {Corner::NE, Corner::NW, Corner::SW, Corner::SE, Corner::Central}) total += l.count(c);
      EXPECT_EQ(total, n);
    }
  }
}

TEST(Skew, FirstEastPosition) {
  const std::vector<int32_t> inc{1, 2, 3};
  EXPECT_EQ(first_east_position(inc), 4);
  const std::vector<int32_t> v{2, 3, 1};  // completes 231 at position 3
  EXPECT_EQ(first_east_position(v), 3);
  const std::vector<int32_t> w{2, 1, 3};  // completes 213 at position 3
  EXPECT_EQ(first_east_position(w), 3);
}
