#include <gtest/gtest.h>

#include <random>

#include "freeaut/orbit.hpp"
#include "oracles.hpp"

using namespace freeaut;

namespace {

Word W(const std::string& s, int rank = 2) { return parse_word(s, rank); }

const std::string kX2 = "a^2b^4a^6b^8";
const std::string kX3 = "a^3b^6a^9b^12";

}  // namespace

TEST(Reduction, Examples) {
  const ReductionTrace t1 = reduce_to_minimal(W("baB"));
  EXPECT_EQ(to_string(t1.minimal), "a");
  EXPECT_TRUE(t1.steps.empty());

  const ReductionTrace t2 = reduce_to_minimal(W("abAB"));
  EXPECT_EQ(t2.minimal.size(), 4u);
  EXPECT_TRUE(t2.steps.empty());
  for (const auto& a : enumerate_whitehead_autos(2)) EXPECT_GE(a.apply(t2.minimal).size(), 4u);

  const ReductionTrace t3 = reduce_to_minimal(W(kX2));
  EXPECT_EQ(t3.minimal.size(), 20u);
  EXPECT_TRUE(t3.steps.empty());
}

TEST(Reduction, TraceIsStrictlyDecreasingAndMinimal) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int rank = 2 + static_cast<int>(seed % 2);
    std::mt19937_64 rng(seed);
    const Word w = random_automorphism(rank, 6, seed).apply(random_word(rank, 2 + seed % 6, rng));
    const ReductionTrace t = reduce_to_minimal(w);
    std::size_t prev = t.start.size();
    for (const auto& s : t.steps) {
      EXPECT_LT(s.result.size(), prev);
      prev = s.result.size();
    }
    for (const auto& a : enumerate_whitehead_autos(rank)) EXPECT_GE(a.apply(t.minimal).size(), t.minimal.size());
    EXPECT_EQ(t.automorphism().apply(t.start), t.minimal);
  }
}

TEST(LevelSet, Examples) {
  const LevelSet a = minimal_level_set(cyclic_word(W("a")));
  EXPECT_EQ(a.size(), 4u);
  std::set<std::string> names;
  for (const auto& c : a.classes()) names.insert(to_string(c));
  EXPECT_EQ(names, (std::set<std::string>{"a", "A", "b", "B"}));

  const LevelSet x2 = minimal_level_set(cyclic_word(W(kX2)));
  EXPECT_EQ(x2.size(), 8u);
  EXPECT_EQ(x2.length(), 20u);
  EXPECT_THROW(minimal_level_set(cyclic_word(W(kX2)), 1), CapExceeded);
  try {
    minimal_level_set(cyclic_word(W(kX2)), 3);
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 3u);
  }
}

TEST(LevelSet, ClosedEqualLengthAndGcd) {
  for (const char* s : {"abAB", "aabAB", "abc", "aabbcAB"}) {
    const int rank = std::string(s).find('c') != std::string::npos ? 3 : 2;
    const LevelSet ls = minimal_level_set(cyclic_word(W(s, rank)));
    const auto g = abelianize(ls.basepoint().as_word()).content();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const CyclicWord& c = ls[i];
      EXPECT_EQ(c.size(), ls.length());
      EXPECT_EQ(abelianize(c.as_word()).content(), g);
      EXPECT_EQ(ls.tree_automorphism(i).apply(ls.basepoint()), c);
      for (const auto& p : enumerate_permutation_autos(rank)) EXPECT_TRUE(ls.find(p.apply(c))) << s;
      for (const auto& h : enumerate_whitehead_autos(rank)) {
        const CyclicWord img = h.apply(c);
        if (img.size() == c.size()) {
          EXPECT_TRUE(ls.find(img)) << s;
        }
      }
    }
  }
}

TEST(OrbitEqual, Examples) {
  const Word x = W("aabAbb");
  const Word w = W("bAbba");
  EXPECT_TRUE(orbit_equal(x, conjugate(w, x)).equal);
  const OrbitComparison inv = orbit_equal(W(kX2), invert(W(kX2)));
  EXPECT_FALSE(inv.equal);
  EXPECT_FALSE(inv.witness);
  EXPECT_FALSE(orbit_equal(W(kX2), W(kX3)).equal);
  EXPECT_NE(abelianize(W(kX2)).content(), abelianize(W(kX3)).content());
  EXPECT_TRUE(orbit_equal(Word(2), Word(2)).equal);
  EXPECT_FALSE(orbit_equal(Word(2), W("a")).equal);
  EXPECT_THROW(orbit_equal(W("a"), W("a", 3)), RankError);
}

TEST(OrbitEqual, WitnessSoundnessAndSymmetry) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 150; ++t) {
    const Word u = random_word(2, 1 + rng() % 9, rng);
    const Automorphism a = random_automorphism(2, 1 + static_cast<int>(rng() % 5), rng());
    const Word v = conjugate(random_word(2, rng() % 4, rng), a.apply(u));
    const OrbitComparison r = orbit_equal(u, v);
    ASSERT_TRUE(r.equal) << to_string(u) << " / " << to_string(v);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(cyclic_word(r.witness->apply(u)), cyclic_word(v));
    const OrbitComparison back = orbit_equal(v, u);
    EXPECT_TRUE(back.equal);
    EXPECT_EQ(cyclic_word(back.witness->apply(v)), cyclic_word(u));
  }
}

TEST(OrbitEqual, GcdFastPathConsistency) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 200; ++t) {
    const Word u = random_word(2, 1 + rng() % 8, rng);
    const Word v = random_word(2, 1 + rng() % 8, rng);
    const OrbitComparison r = orbit_equal(u, v);
    if (abelianize(u).content() != abelianize(v).content()) {
      EXPECT_FALSE(r.equal);
    }
    if (r.equal) {
      EXPECT_EQ(cyclic_word(r.witness->apply(u)), cyclic_word(v));
    }
  }
}

TEST(Primitive, Examples) {
  EXPECT_TRUE(is_primitive(W("a")));
  EXPECT_TRUE(is_primitive(W("aab")));
  EXPECT_FALSE(is_primitive(W("abAB")));
  EXPECT_FALSE(is_primitive(W("aa")));
  EXPECT_THROW(is_primitive(Word(2)), PreconditionError);
  EXPECT_TRUE(is_primitive(W("A", 1)));
  EXPECT_FALSE(is_primitive(W("aa", 1)));
}

TEST(Separable, Examples) {
  EXPECT_TRUE(is_separable(W("a")).separable);
  EXPECT_FALSE(is_separable(W("abAB")).separable);
  EXPECT_TRUE(is_separable(W("ab")).separable);
  EXPECT_FALSE(is_separable(W("a", 1)).separable);
}

TEST(RandomPrimitive, Properties) {
  EXPECT_EQ(random_primitive(2, 0, 7), W("a"));
  EXPECT_EQ(random_primitive(3, 10, 99), random_primitive(3, 10, 99));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Word p = random_primitive(2 + static_cast<int>(seed % 3), static_cast<int>(seed % 13), seed);
    EXPECT_TRUE(is_primitive(p)) << to_string(p);
  }
}

TEST(AutInvariance, PrimitivityAndSeparability) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 150; ++t) {
    const int rank = 2 + t % 2;
    const Word w = random_word(rank, 1 + rng() % 8, rng);
    const Automorphism a = random_automorphism(rank, 1 + static_cast<int>(rng() % 6), rng());
    const Word aw = a.apply(w);
    EXPECT_EQ(is_primitive(aw), is_primitive(w)) << to_string(w);
    EXPECT_EQ(is_separable(aw).separable, is_separable(w).separable) << to_string(w);
  }
}
