#include <gtest/gtest.h>

#include <random>

#include "freeaut/word.hpp"
#include "oracles.hpp"

using namespace freeaut;

namespace {

Word W(const std::string& s, int rank = 2) { return parse_word(s, rank); }

}  // namespace

TEST(Parse, Basics) {
  const Word w = W("abAB");
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w[0], Generator(0, 1));
  EXPECT_EQ(w[1], Generator(1, 1));
  EXPECT_EQ(w[2], Generator(0, -1));
  EXPECT_EQ(w[3], Generator(1, -1));
  EXPECT_TRUE(W("aA").empty());
  EXPECT_EQ(W("a^2b^4a^6b^8").size(), 20u);
  EXPECT_EQ(W(" a b ^ 3 "), W("abbb"));
  EXPECT_EQ(to_string(W("a^2b^4a^6b^8"), true), "a^2b^4a^6b^8");
  EXPECT_EQ(to_string(Word(2)), "1");
}

TEST(Parse, Errors) {
  EXPECT_THROW(W("ab1"), SyntaxError);
  EXPECT_THROW(W("^2"), SyntaxError);
  EXPECT_THROW(W("a^"), SyntaxError);
  EXPECT_THROW(W("a^0"), SyntaxError);
  EXPECT_THROW(W("abc", 2), RankError);
  EXPECT_THROW(W("a", 0), RankError);
  EXPECT_THROW(W("a", 27), RankError);
  try {
    W("ab#");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Reduce, Examples) {
  const std::vector<Generator> abBA{{0, 1}, {1, 1}, {1, -1}, {0, -1}};
  EXPECT_TRUE(free_reduce(2, abBA).empty());
  const std::vector<Generator> abBb{{0, 1}, {1, 1}, {1, -1}, {1, 1}};
  EXPECT_EQ(free_reduce(2, abBb), W("ab"));
  const Word r = W("abAB");
  EXPECT_EQ(free_reduce(2, r.letters()), r);
}

TEST(Reduce, MatchesOracleOnRandomStrings) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 2000; ++t) {
    std::string s;
    const std::size_t len = rng() % 20;
    for (std::size_t i = 0; i < len; ++i) s.push_back("aAbBcC"[rng() % 6]);
    const Word w = parse_word(s, 3);
    EXPECT_EQ(to_string(w), s.empty() || oracle::reduce(s).empty() ? "1" : oracle::reduce(s)) << s;
    EXPECT_LE(w.size(), s.size());
    EXPECT_EQ(free_reduce(3, w.letters()), w);
  }
}

TEST(CyclicReduce, Examples) {
  const auto r1 = cyclic_reduce(W("baB"));
  EXPECT_EQ(to_string(r1.cyclic), "a");
  EXPECT_EQ(r1.conjugator, W("b"));
  const auto r2 = cyclic_reduce(W("abAB"));
  EXPECT_EQ(r2.cyclic, canonical_rotation(2, W("abAB").letters()));
  EXPECT_TRUE(r2.conjugator.empty());
  const auto r3 = cyclic_reduce(Word(2));
  EXPECT_TRUE(r3.cyclic.empty());
  EXPECT_TRUE(r3.conjugator.empty());
}

TEST(CyclicReduce, ConjugationIdentityAndOracle) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 1000; ++t) {
    const std::string s = oracle::random_reduced(3, rng() % 16, rng);
    const Word w = parse_word(s, 3);
    const auto cr = cyclic_reduce(w);
    EXPECT_LE(cr.cyclic.size(), w.size());
    EXPECT_EQ(conjugate(cr.conjugator, cr.cyclic.as_word()), w) << s;
    const std::string want = oracle::canonical_class(s);
    EXPECT_EQ(to_string(cr.cyclic), want.empty() ? "1" : want) << s;
  }
}

TEST(CanonicalRotation, RotationInvariance) {
  const Word w = W("abAB");
  const CyclicWord c = canonical_rotation(2, w.letters());
  std::vector<Generator> l(w.letters().begin(), w.letters().end());
  for (std::size_t k = 0; k < l.size(); ++k) {
    std::rotate(l.begin(), l.begin() + 1, l.end());
    EXPECT_EQ(canonical_rotation(2, l), c);
  }
  EXPECT_EQ(to_string(canonical_rotation(2, W("a").letters())), "a");
  const std::vector<Generator> baAB{{1, 1}, {0, 1}, {0, -1}, {1, -1}};
  EXPECT_THROW(canonical_rotation(2, baAB), PreconditionError);
  const std::vector<Generator> abA{{0, 1}, {1, 1}, {0, -1}};
  EXPECT_THROW(canonical_rotation(2, abA), PreconditionError);
}

TEST(CanonicalRotation, LeastRotationMatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    // Low-entropy alphabets produce many repeated rotations.
    std::string s = oracle::cyclic_core(oracle::random_reduced(2, 1 + rng() % 24, rng));
    if (t % 3 == 0) s = oracle::cyclic_core(oracle::power(oracle::cyclic_core(oracle::random_reduced(2, 1 + rng() % 4, rng)), 1 + static_cast<int>(rng() % 5)));
    if (s.empty()) continue;
    const CyclicWord c = cyclic_word(parse_word(s, 2));
    EXPECT_EQ(to_string(c), oracle::min_rotation(s)) << s;
  }
}

TEST(CyclicWord, OrderingIsShortlex) {
  EXPECT_LT(cyclic_word(W("b")), cyclic_word(W("aa")));
  EXPECT_LT(cyclic_word(W("a")), cyclic_word(W("A")));
  EXPECT_LT(cyclic_word(W("A")), cyclic_word(W("b")));
}

TEST(GroupOps, Examples) {
  EXPECT_EQ(invert(W("ab")), W("BA"));
  EXPECT_TRUE(concat(W("a"), W("A")).empty());
  const Word p = power(W("abAB"), 2);
  EXPECT_EQ(p, W("abABabAB"));
  EXPECT_EQ(p.size(), 8u);
  EXPECT_EQ(power(W("ab"), -2), W("BABA"));
  EXPECT_TRUE(power(W("ab"), 0).empty());
  EXPECT_THROW(W("a") * parse_word("a", 3), RankError);
}

TEST(GroupOps, PowerMatchesOracle) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    const std::string s = oracle::random_reduced(2, rng() % 8, rng);
    const int n = static_cast<int>(rng() % 7);
    const std::string want = oracle::power(s, n);
    EXPECT_EQ(to_string(power(parse_word(s, 2), n)), want.empty() ? "1" : want);
  }
}

TEST(Abelianize, ExamplesAndHomomorphism) {
  const auto x2 = abelianize(W("a^2b^4a^6b^8"));
  EXPECT_EQ(x2.coords(), (std::vector<std::int64_t>{8, 12}));
  EXPECT_EQ(x2.content(), 4);
  EXPECT_EQ(abelianize(W("abAB")).coords(), (std::vector<std::int64_t>{0, 0}));
  EXPECT_EQ(abelianize(W("abAB")).content(), 0);
  EXPECT_EQ(abelianize(W("a")).coords(), (std::vector<std::int64_t>{1, 0}));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const Word u = parse_word(oracle::random_reduced(3, rng() % 12, rng), 3);
    const Word v = parse_word(oracle::random_reduced(3, rng() % 12, rng), 3);
    EXPECT_EQ(abelianize(u * v), abelianize(u) + abelianize(v));
    EXPECT_EQ(abelianize(invert(u)), -abelianize(u));
  }
}
