#include <gtest/gtest.h>

#include "freeaut/certify.hpp"
#include "freeaut/family.hpp"

using namespace freeaut;

namespace {

Word W(const std::string& s, int rank = 2) { return parse_word(s, rank); }

VerifyOptions quick() {
  VerifyOptions o;
  o.samples = 150;
  o.defect_samples = 400;
  return o;
}

}  // namespace

TEST(Classify, SeparableGenerator) {
  const Word x = W("a");
  const DistortionVerdict v = classify(x);
  ASSERT_EQ(v.kind(), VerdictKind::BoundedSeparable);
  const Word& p = v.separable().witness_factor;
  EXPECT_EQ(p, W("b"));
  EXPECT_TRUE(is_primitive(x * p));
  EXPECT_TRUE(is_primitive(p));
  const VerificationReport r = verify(v, x, quick());
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.bounds.size(), 10u);
  for (const auto& b : r.bounds) EXPECT_EQ(b.upper, 2);
}

TEST(Classify, SeparableFamily) {
  for (const char* s : {"ab", "aa", "baB", "aab", "abab", "abb"}) {
    const Word x = W(s);
    const DistortionVerdict v = classify(x);
    ASSERT_EQ(v.kind(), VerdictKind::BoundedSeparable) << s;
    const Word& p = v.separable().witness_factor;
    for (int n = 1; n <= 10; ++n) EXPECT_TRUE(is_primitive(power(x, n) * p)) << s << " n=" << n;
    EXPECT_TRUE(verify(v, x, quick()).passed()) << s;
  }
}

TEST(Classify, UndistortedCommutator) {
  const Word x = W("abAB");
  const DistortionVerdict v = classify(x);
  ASSERT_EQ(v.kind(), VerdictKind::Undistorted);
  const Undistorted& u = v.undistorted();
  EXPECT_EQ(u.reduced, cyclic_word(x));
  EXPECT_EQ(u.qm.base(), W("abABabAB"));
  EXPECT_EQ(u.primitive_bound, 8);
  EXPECT_EQ(u.defect_bound, Rational(14));
  EXPECT_GE(u.homogenized_value, 1);
  EXPECT_GT(u.slope, Rational(0));
  EXPECT_GE(u.slope, Rational(1) / (Rational(8) + u.defect_bound));

  const VerificationReport r = verify(v, x, quick());
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.bounds.size(), 10u);
  for (std::size_t i = 1; i < r.bounds.size(); ++i) EXPECT_LT(*r.bounds[i - 1].rate, *r.bounds[i].rate);
}

TEST(Classify, UndistortedFamilyAndSquare) {
  for (const Word& x : {family_word(2), W("aabb")}) {
    const DistortionVerdict v = classify(x);
    ASSERT_EQ(v.kind(), VerdictKind::Undistorted) << to_string(x);
    EXPECT_TRUE(verify(v, x, quick()).passed()) << to_string(x);
  }
}

TEST(Classify, Rejections) {
  EXPECT_THROW(classify(Word(2)), PreconditionError);
  const DistortionVerdict v = classify(W("a"));
  EXPECT_THROW(verify(v, W("b")), PreconditionError);
}

TEST(Verify, TamperedPrimitiveBoundFails) {
  const Word x = W("abAB");
  DistortionVerdict v = classify(x);
  Undistorted& u = v.undistorted();
  u.primitive_bound = 0;
  u.slope = abs(Rational(u.homogenized_value)) / (Rational(0) + u.defect_bound);
  const VerificationReport r = verify(v, x, quick());
  EXPECT_FALSE(r.passed());
  ASSERT_TRUE(r.primitive_bound);
  EXPECT_FALSE(r.primitive_bound->violations.empty());
}

TEST(Verify, TamperedSlopeFails) {
  const Word x = W("abAB");
  DistortionVerdict v = classify(x);
  v.undistorted().slope = Rational(1);
  EXPECT_FALSE(verify(v, x, quick()).passed());
}

TEST(NormUpperBound, Examples) {
  EXPECT_EQ(primitive_norm_upper_bound(W("a"), 3), 1);
  EXPECT_EQ(primitive_norm_upper_bound(W("aab"), 3), 1);
  EXPECT_EQ(primitive_norm_upper_bound(W("aa"), 3), 2);
  EXPECT_EQ(primitive_norm_upper_bound(Word(2), 3), 0);
}

TEST(NormUpperBound, ConsistentWithCertifiedLowerBounds) {
  const Word x = W("abAB");
  const DistortionVerdict v = classify(x);
  const VerificationReport r = verify(v, x, quick());
  for (const auto& b : r.bounds) {
    if (b.n > 3) break;
    const auto up = primitive_norm_upper_bound(power(x, b.n), 4);
    ASSERT_TRUE(up) << b.n;
    EXPECT_LE(b.lower, *up);
    EXPECT_LE(b.rate->ceil(), *up);
  }
}
