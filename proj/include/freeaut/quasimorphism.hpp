#ifndef FREEAUT_QUASIMORPHISM_HPP
#define FREEAUT_QUASIMORPHISM_HPP

// Brooks counting quasimorphisms Br_w(x) = C_w(x) - C_w(x^-1), where C_w
// counts possibly overlapping occurrences of the reduced word w in the reduced
// word x.
//
// The homogenization lim Br_w(x^n)/n is computed exactly: for the cyclic
// reduction r of x it equals the number of offsets in one period at which w
// occurs in r^inf, minus the same count for (r^-1)^inf.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "freeaut/automorphism.hpp"
#include "freeaut/orbit.hpp"
#include "freeaut/rational.hpp"
#include "freeaut/whitehead_graph.hpp"
#include "freeaut/word.hpp"

namespace freeaut {

class BrooksQm {
 public:
  explicit BrooksQm(Word base) : base_(std::move(base)) {
    if (base_.empty()) throw PreconditionError("Brooks quasimorphism needs a nonempty base word");
  }
  int rank() const noexcept { return base_.rank(); }
  const Word& base() const noexcept { return base_; }

 private:
  Word base_;
};

inline std::size_t count_occurrences(std::span<const Generator> pattern, std::span<const Generator> text) {
  if (pattern.empty()) throw PreconditionError("count_occurrences: empty pattern");
  if (pattern.size() > text.size()) return 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i)
    if (std::equal(pattern.begin(), pattern.end(), text.begin() + static_cast<std::ptrdiff_t>(i))) ++n;
  return n;
}

inline std::size_t count_occurrences(const Word& pattern, const Word& x) {
  detail::check_same_rank(pattern.rank(), x.rank());
  return count_occurrences(pattern.letters(), x.letters());
}

// Offsets i in [0, |r|) at which the pattern occurs in the periodic word r^inf.
inline std::size_t count_periodic_occurrences(std::span<const Generator> pattern, std::span<const Generator> r) {
  if (pattern.empty()) throw PreconditionError("count_periodic_occurrences: empty pattern");
  if (r.empty()) return 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < pattern.size() && hit; ++j) hit = pattern[j] == r[(i + j) % r.size()];
    n += hit ? 1 : 0;
  }
  return n;
}

// Number of rotations of c that contain the pattern as a prefix; 0 when the
// pattern is longer than c.
inline std::size_t count_rotation_occurrences(const Word& pattern, const CyclicWord& c) {
  detail::check_same_rank(pattern.rank(), c.rank());
  if (pattern.size() > c.size()) return 0;
  return count_periodic_occurrences(pattern.letters(), c.letters());
}

inline std::int64_t brooks(const BrooksQm& q, const Word& x) {
  detail::check_same_rank(q.rank(), x.rank());
  return static_cast<std::int64_t>(count_occurrences(q.base(), x)) -
         static_cast<std::int64_t>(count_occurrences(q.base(), invert(x)));
}

inline std::int64_t homogenized(const BrooksQm& q, const Word& x) {
  detail::check_same_rank(q.rank(), x.rank());
  const CyclicWord r = cyclic_word(x);
  if (r.empty()) return 0;
  const CyclicWord rinv = cyclic_word(invert(r.as_word()));
  return static_cast<std::int64_t>(count_periodic_occurrences(q.base().letters(), r.letters())) -
         static_cast<std::int64_t>(count_periodic_occurrences(q.base().letters(), rinv.letters()));
}

// x -> q(x) + q(sigma(x)) with sigma: a -> a^-1, b -> b (rank 2 only).
inline std::int64_t symmetrized_sigma(const BrooksQm& q, const Word& x) {
  if (q.rank() != 2) throw RankError("sigma symmetrization is defined for rank 2");
  return brooks(q, x) + brooks(q, rank2::sigma().apply(x));
}

// Default certificate bound 2(|w| - 1) for the defect of Br_w.
inline Rational default_defect_bound(const BrooksQm& q) {
  return Rational(2 * (static_cast<std::int64_t>(q.base().size()) - 1));
}

struct DefectReport {
  Rational claimed_bound;
  Rational empirical_max;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<std::pair<Word, Word>> worst_pair;  // a pair attaining empirical_max (if > 0)
  bool passed() const { return empirical_max <= claimed_bound; }
};

namespace detail {

// Random reduced word of length <= max_len. Half the draws splice in a power
// of the base word (or its inverse) so long patterns actually occur.
inline Word defect_sample(const BrooksQm& q, std::size_t max_len, std::mt19937_64& rng) {
  const int rank = q.rank();
  auto rand_len = [&](std::size_t hi) { return static_cast<std::size_t>(draw(rng, hi + 1)); };
  if (draw(rng, 2) == 0) return random_word(rank, rand_len(max_len), rng);
  Word core = power(q.base(), static_cast<long long>(draw(rng, 3)) + 1);
  if (draw(rng, 2)) core = invert(core);
  const std::size_t side = max_len / 2;
  return random_word(rank, rand_len(side), rng) * core * random_word(rank, rand_len(side), rng);
}

}  // namespace detail

// max |q(a) - q(ab) + q(b)| over seeded random pairs.
inline DefectReport estimate_defect(const BrooksQm& q, std::size_t samples, std::size_t max_len, std::uint64_t seed,
                                    std::optional<Rational> claimed_bound = std::nullopt) {
  if (samples < 1) throw PreconditionError("estimate_defect: samples must be >= 1");
  std::mt19937_64 rng(seed);
  DefectReport rep{claimed_bound.value_or(default_defect_bound(q)), Rational(0), samples, seed, std::nullopt};
  std::int64_t worst = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Word a = detail::defect_sample(q, max_len, rng);
    Word b = detail::defect_sample(q, max_len, rng);
    const std::int64_t d = brooks(q, a) - brooks(q, a * b) + brooks(q, b);
    const std::int64_t ad = d < 0 ? -d : d;
    if (ad > worst) {
      worst = ad;
      rep.worst_pair = {a, b};
    }
  }
  rep.empirical_max = Rational(worst);
  return rep;
}

struct PrimitiveBoundViolation {
  Word primitive;
  std::string kind;  // "cyclic-square", "cyclic-inverse-square" or "brooks-bound"
  std::int64_t value;
};

struct PrimitiveBoundReport {
  Word root;  // x, with base x^2
  std::int64_t bound = 0;  // claimed bound on |Br_{x^2}| over primitives
  std::size_t samples = 0;  // random primitives
  std::size_t probes = 0;   // conjugated generators
  std::uint64_t seed = 0;
  std::int64_t max_abs_brooks = 0;
  std::vector<PrimitiveBoundViolation> violations;
  bool passed() const { return violations.empty(); }
};

// x with q = Br_{x^2}; requires x cyclically reduced with a connected
// Whitehead graph without cut vertex.
inline Word square_root_base(const BrooksQm& q) {
  const auto s = q.base().letters();
  if (s.size() % 2 != 0 || !std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2),
                                       s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2)))
    throw PreconditionError("base word is not a square");
  Word x(q.rank(), s.subspan(0, s.size() / 2));
  if (!detail::is_cyclically_reduced(x.letters())) throw PreconditionError("square root is not cyclically reduced");
  const WhiteheadGraph g = build_whitehead_graph(canonical_rotation(x.rank(), x.letters()));
  if (!g.is_biconnected())
    throw PreconditionError("Whitehead graph of " + to_string(x) + " is disconnected or has a cut vertex");
  return x;
}

// Checks, for random primitives b and for conjugates u g u^-1 of generators
// by prefixes u of x^{+-2}:
//   * no rotation of the cyclic reduction of b contains x^2 or x^-2;
//   * |Br_{x^2}(b)| <= bound (default 2|x|) on the raw word b.
inline PrimitiveBoundReport check_primitive_bound(const BrooksQm& q, std::size_t samples, std::uint64_t seed,
                                                  std::optional<std::int64_t> bound = std::nullopt,
                                                  int max_steps = 12) {
  const Word x = square_root_base(q);
  const int rank = q.rank();
  const Word sq = q.base();
  const Word sq_inv = invert(sq);
  PrimitiveBoundReport rep{x, bound.value_or(2 * static_cast<std::int64_t>(x.size())), samples, 0, seed, 0, {}};

  auto check = [&](const Word& b) {
    const CyclicWord cb = cyclic_word(b);
    if (auto n = count_rotation_occurrences(sq, cb))
      rep.violations.push_back({b, "cyclic-square", static_cast<std::int64_t>(n)});
    if (auto n = count_rotation_occurrences(sq_inv, cb))
      rep.violations.push_back({b, "cyclic-inverse-square", static_cast<std::int64_t>(n)});
    const std::int64_t br = brooks(q, b);
    const std::int64_t abs_br = br < 0 ? -br : br;
    rep.max_abs_brooks = std::max(rep.max_abs_brooks, abs_br);
    if (abs_br > rep.bound) rep.violations.push_back({b, "brooks-bound", br});
  };

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const int steps = static_cast<int>(detail::draw(rng, static_cast<std::uint64_t>(max_steps) + 1));
    check(random_primitive(rank, steps, rng()));
  }
  for (const Word* w : {&sq, &sq_inv}) {
    for (std::size_t len = 1; len <= w->size(); ++len) {
      const Word u(rank, w->letters().subspan(0, len));
      for (int code = 0; code < 2 * rank; ++code) {
        check(conjugate(u, Word(rank, {Generator::from_code(code)})));
        ++rep.probes;
      }
    }
  }
  return rep;
}

}  // namespace freeaut

#endif  // FREEAUT_QUASIMORPHISM_HPP
