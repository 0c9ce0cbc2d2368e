#include <gtest/gtest.h>

#include <random>
#include <set>

#include "freeaut/automorphism.hpp"
#include "freeaut/orbit.hpp"
#include "oracles.hpp"

using namespace freeaut;

namespace {

Word W(const std::string& s, int rank = 2) { return parse_word(s, rank); }

std::vector<std::string> image_strings(const Automorphism& a) {
  std::vector<std::string> out;
  for (const auto& w : a.images()) out.push_back(w.empty() ? "" : to_string(w));
  return out;
}

// Images of a Whitehead move computed from the textbook definition.
std::vector<std::string> oracle_whitehead_images(const WhiteheadMove& m, int rank) {
  const char mc = letter_char(m.multiplier);
  const std::string mul(1, mc);
  const std::string minv(1, oracle::inv(mc));
  std::vector<std::string> out;
  for (int i = 0; i < rank; ++i) {
    const std::string x(1, static_cast<char>('a' + i));
    switch (m.actions[static_cast<std::size_t>(i)]) {
      case Action::Fix: out.push_back(x); break;
      case Action::Left: out.push_back(oracle::reduce(mul + x)); break;
      case Action::Right: out.push_back(oracle::reduce(x + minv)); break;
      case Action::Conjugate: out.push_back(oracle::reduce(mul + x + minv)); break;
    }
  }
  return out;
}

}  // namespace

TEST(Enumeration, Counts) {
  EXPECT_EQ(enumerate_permutation_autos(1).size(), 2u);
  EXPECT_EQ(enumerate_permutation_autos(2).size(), 8u);
  EXPECT_EQ(enumerate_permutation_autos(3).size(), 48u);
  EXPECT_EQ(enumerate_whitehead_autos(2).size(), 16u);
  EXPECT_EQ(enumerate_whitehead_autos(3).size(), 96u);
  EXPECT_THROW(enumerate_whitehead_autos(1), PreconditionError);
  EXPECT_TRUE(enumerate_permutation_autos(2).front().is_identity());
}

TEST(Enumeration, PermutationsAreDistinctSignedPermutations) {
  for (int rank = 1; rank <= 3; ++rank) {
    std::set<std::vector<std::string>> seen;
    for (const auto& a : enumerate_permutation_autos(rank)) {
      auto imgs = image_strings(a);
      for (const auto& s : imgs) EXPECT_EQ(s.size(), 1u);
      seen.insert(imgs);
    }
    EXPECT_EQ(seen.size(), enumerate_permutation_autos(rank).size());
  }
}

TEST(Enumeration, WhiteheadImagesMatchDefinition) {
  for (int rank = 2; rank <= 3; ++rank) {
    for (const auto& m : enumerate_whitehead_moves(rank)) {
      EXPECT_EQ(m.actions[m.multiplier.index], Action::Fix);
      EXPECT_EQ(image_strings(Automorphism::from_move(m)), oracle_whitehead_images(m, rank)) << describe(m);
    }
  }
}

TEST(Apply, Examples) {
  const Automorphism t = rank2::transvection();
  EXPECT_EQ(t.image(0), W("ab"));
  EXPECT_EQ(t.image(1), W("b"));
  EXPECT_EQ(t.apply(W("a")), W("ab"));
  EXPECT_EQ(rank2::sigma().apply(W("a^2b^4a^6b^8")), W("A^2b^4A^6b^8"));
  for (int k = 2; k <= 4; ++k) {
    const std::string x = "a^" + std::to_string(k) + "b^" + std::to_string(2 * k) + "a^" + std::to_string(3 * k) + "b^" + std::to_string(4 * k);
    const std::string sx = "A^" + std::to_string(k) + "b^" + std::to_string(2 * k) + "A^" + std::to_string(3 * k) + "b^" + std::to_string(4 * k);
    EXPECT_EQ(rank2::sigma().apply(W(x)), W(sx));
  }
  const Word w = W("abAABBab");
  EXPECT_EQ(Automorphism::identity(2).apply(w), w);
}

TEST(Compose, InverseAndOrder) {
  const Automorphism t = rank2::transvection();
  const Automorphism ti = inverse(t);
  EXPECT_EQ(ti.image(0), W("aB"));
  EXPECT_EQ(ti.image(1), W("b"));
  EXPECT_TRUE(compose(t, ti).is_identity());
  EXPECT_TRUE(compose(ti, t).is_identity());

  // compose(psi, phi) applies phi first.
  const Automorphism s = rank2::swap();
  const Word w = W("aab");
  EXPECT_EQ(compose(s, t).apply(w), s.apply(t.apply(w)));
  EXPECT_NE(compose(s, t), compose(t, s));

  const auto perms = enumerate_permutation_autos(2);
  for (const auto& p : perms)
    for (const auto& q : perms) {
      const Automorphism pq = compose(p, q);
      for (int i = 0; i < 2; ++i) EXPECT_EQ(pq.image(i).size(), 1u);
    }
}

TEST(Compose, FactorizationReproducesImages) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Automorphism a = random_automorphism(3, 8, seed);
    const Automorphism rebuilt = Automorphism::from_moves(3, a.factorization());
    EXPECT_EQ(rebuilt.images(), a.images());
    const Automorphism ai = inverse(a);
    EXPECT_EQ(Automorphism::from_moves(3, ai.factorization()).images(), ai.images());
  }
}

TEST(Apply, HomomorphismAndBijection) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 1000; ++t) {
    const Automorphism a = random_automorphism(3, 1 + static_cast<int>(t % 6), static_cast<std::uint64_t>(t));
    const Automorphism ai = inverse(a);
    const std::string us = oracle::random_reduced(3, rng() % 10, rng);
    const std::string vs = oracle::random_reduced(3, rng() % 10, rng);
    const Word u = parse_word(us, 3);
    const Word v = parse_word(vs, 3);
    EXPECT_EQ(a.apply(u * v), a.apply(u) * a.apply(v));
    EXPECT_EQ(ai.apply(a.apply(u)), u);
    const std::string want = oracle::substitute(us, image_strings(a));
    EXPECT_EQ(a.apply(u).empty() ? "" : to_string(a.apply(u)), want);
    EXPECT_EQ(abelianize(a.apply(u)).content(), oracle::gcd_content(us, 3));
  }
}

TEST(Abelianization, Determinants) {
  EXPECT_EQ(abelianization_matrix(Automorphism::identity(3)), IntMatrix::identity(3));
  EXPECT_EQ(abelian_determinant(Automorphism::identity(3)), 1);
  const IntMatrix s = abelianization_matrix(rank2::sigma());
  EXPECT_EQ(s(0, 0), -1);
  EXPECT_EQ(s(1, 1), 1);
  EXPECT_EQ(s(0, 1), 0);
  EXPECT_EQ(s(1, 0), 0);
  EXPECT_EQ(abelian_determinant(rank2::sigma()), -1);
  for (int rank = 2; rank <= 3; ++rank)
    for (const auto& a : enumerate_whitehead_autos(rank)) EXPECT_EQ(abelian_determinant(a), 1);
  for (const auto& a : enumerate_permutation_autos(3)) EXPECT_EQ(std::abs(abelian_determinant(a)), 1);
}

TEST(Abelianization, MatrixIsMultiplicative) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Automorphism p = random_automorphism(3, 5, seed);
    const Automorphism q = random_automorphism(3, 5, seed + 1000);
    EXPECT_EQ(abelianization_matrix(compose(p, q)), abelianization_matrix(p) * abelianization_matrix(q));
    EXPECT_EQ(std::abs(abelian_determinant(compose(p, q))), 1);
  }
}

TEST(Determinant, BruteForceCofactor) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    IntMatrix m(3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = static_cast<std::int64_t>(rng() % 11) - 5;
    const std::int64_t want = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                              m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    EXPECT_EQ(determinant(m), want);
  }
}

TEST(WhiteheadCut, LengthFormulaMatchesDirectApplication) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    const int rank = 2 + static_cast<int>(t % 2);
    const CyclicWord c = cyclic_word(parse_word(oracle::random_reduced(rank, 1 + rng() % 12, rng), rank));
    if (c.empty()) continue;
    const WhiteheadGraph g = build_whitehead_graph(c);
    for (const auto& m : enumerate_whitehead_moves(rank)) {
      const auto len = whitehead_image_length(g, c.size(), whitehead_cut(m));
      EXPECT_EQ(len, static_cast<std::int64_t>(Automorphism::from_move(m).apply(c).size())) << to_string(c) << " " << describe(m);
    }
  }
}

TEST(Moves, InverseAndIdentity) {
  for (const auto& m : enumerate_elementary_moves(3)) {
    const Automorphism a = Automorphism::from_move(m);
    EXPECT_TRUE(compose(Automorphism::from_move(inverse_move(m)), a).is_identity()) << describe(m);
    EXPECT_EQ(is_identity_move(m), a.is_identity()) << describe(m);
  }
  EXPECT_EQ(describe(rank2::transvection().factorization().front()), "wh[B]{a->ab}");
  EXPECT_EQ(describe(rank2::sigma().factorization().front()), "perm{a->A}");
}
