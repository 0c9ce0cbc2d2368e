#ifndef FREEAUT_FAMILY_HPP
#define FREEAUT_FAMILY_HPP

// Checks on the rank-2 family x_k = a^k b^2k a^3k b^4k (k >= 2):
//   permutation-free    the 8 signed permutations send the class of x_k to 8 distinct classes
//   whitehead-rigid     on every class of the level set, each Whitehead move fixes the class or lengthens it
//   not-inverted        x_k and x_k^-1 lie in different Aut-orbits
//   gcd-separated       x_k and x_l (k != l) lie in different Aut-orbits; the abelianization gcd already differs
//   aut-plus-chiral     the class stabilizer lies in Aut+, sigma(x_k) ~ x_k with only determinant -1 witnesses
//   pairwise            x_k^{+-1}, sigma(x_k)^{+-1} across the family are pairwise separated as required

#include <algorithm>
#include <chrono>
#include <set>
#include <string>
#include <vector>

#include "freeaut/automorphism.hpp"
#include "freeaut/orbit.hpp"
#include "freeaut/stabilizer.hpp"
#include "freeaut/word.hpp"

namespace freeaut {

inline Word family_word(int k, int rank = 2) {
  if (k < 1) throw PreconditionError("family index must be positive");
  const Word a = generator_word(rank, 0);
  const Word b = generator_word(rank, 1);
  return power(a, k) * power(b, 2 * k) * power(a, 3 * k) * power(b, 4 * k);
}

struct FamilyCheck {
  std::string lemma;  // short check id, see header comment
  std::string subject;
  bool passed = false;
  std::string detail;
};

struct FamilyReport {
  std::vector<int> ks;
  std::vector<FamilyCheck> checks;
  std::vector<std::pair<int, double>> seconds;  // per-k wall time; excluded from JSON output

  bool passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const FamilyCheck& c) { return c.passed; });
  }
};

namespace detail {

inline std::string pow_name(const std::string& base, int e) { return e == 1 ? base : base + "^-1"; }

}  // namespace detail

inline FamilyReport check_family(std::vector<int> ks, std::size_t cap = kDefaultCap) {
  for (int k : ks)
    if (k < 2) throw PreconditionError("family checks need k >= 2, got " + std::to_string(k));
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  FamilyReport rep;
  rep.ks = ks;
  auto add = [&](std::string lemma, std::string subject, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(lemma), std::move(subject), ok, std::move(detail)});
  };
  const Automorphism sigma = rank2::sigma();
  const auto& perms = enumerate_permutation_autos(2);
  const auto& whitehead = enumerate_whitehead_autos(2);

  for (int k : ks) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string xk = "x_" + std::to_string(k);
    const Word x = family_word(k);
    const CyclicWord cx = cyclic_word(x);

    std::set<CyclicWord> images;
    for (const auto& t : perms) images.insert(t.apply(cx));
    add("permutation-free", xk, images.size() == perms.size(),
        std::to_string(images.size()) + " distinct classes under " + std::to_string(perms.size()) + " permutations");

    const LevelSet ls = minimal_level_set(cx, cap);
    bool rigid = ls.size() == perms.size() && ls.length() == cx.size();
    std::string rigid_detail = "level set of " + std::to_string(ls.size()) + " classes of length " + std::to_string(ls.length());
    for (const auto& c : ls.classes()) {
      for (const auto& h : whitehead) {
        const CyclicWord img = h.apply(c);
        if (img != c && img.size() <= c.size()) {
          rigid = false;
          rigid_detail = describe(h.factorization().front()) + " moves " + to_string(c, true) + " to " + to_string(img, true);
        }
      }
    }
    add("whitehead-rigid", xk, rigid, rigid_detail);

    const OrbitComparison inv = orbit_equal(x, invert(x), cap);
    add("not-inverted", xk + " vs " + xk + "^-1", !inv.equal, inv.reason);

    const McCoolGraph mc = build_mccool_graph(cx, cap);
    const auto gens = loop_generators(mc);
    const bool in_plus = stabilizer_in_aut_plus(gens);
    const Word sx = sigma.apply(x);
    const OrbitComparison same = orbit_equal(x, sx, cap);
    bool chiral = in_plus && same.equal && abelian_determinant(sigma) == -1 && cyclic_word(sigma.apply(x)) == cyclic_word(sx);
    std::size_t witnesses = 0;
    if (same.equal) {
      const auto to_min = reduce_to_minimal(x).automorphism();
      const auto from_min = inverse(to_min);
      if (abelian_determinant(*same.witness) != -1) chiral = false;
      ++witnesses;
      for (const auto& g : gens) {
        const Automorphism w = compose(*same.witness, compose(from_min, compose(g, to_min)));
        if (cyclic_word(w.apply(x)) != cyclic_word(sx) || abelian_determinant(w) != -1) chiral = false;
        ++witnesses;
      }
    }
    add("aut-plus-chiral", xk + " vs sigma(" + xk + ")", chiral,
        std::to_string(gens.size()) + " stabilizer generators" + (in_plus ? " all in Aut+" : " leave Aut+") + ", " +
            std::to_string(witnesses) + " witnesses checked");

    for (int j : {1, -1}) {
      const Word rhs = j == 1 ? sx : invert(sx);
      const OrbitComparison r = orbit_equal_aut_plus(x, rhs, cap);
      add("pairwise", xk + " vs " + detail::pow_name("sigma(" + xk + ")", j) + " (Aut+)", !r.equal, r.reason);
    }
    rep.seconds.emplace_back(k, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }

  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (std::size_t j = i + 1; j < ks.size(); ++j) {
      const int k = ks[i];
      const int l = ks[j];
      const std::string xk = "x_" + std::to_string(k);
      const std::string xl = "x_" + std::to_string(l);
      const Word x = family_word(k);
      const Word y = family_word(l);
      const auto gx = abelianize(x).content();
      const auto gy = abelianize(y).content();
      const OrbitComparison r = orbit_equal(x, y, cap);
      add("gcd-separated", xk + " vs " + xl, gx != gy && !r.equal,
          "gcd " + std::to_string(gx) + " vs " + std::to_string(gy));

      const Word sx = rank2::sigma().apply(x);
      const Word sy = rank2::sigma().apply(y);
      for (int e1 : {1, -1}) {
        for (int e2 : {1, -1}) {
          const Word sy_e = e2 == 1 ? sy : invert(sy);
          const Word sx_e = e1 == 1 ? sx : invert(sx);
          const Word x_e = e1 == 1 ? x : invert(x);
          const Word y_e = e2 == 1 ? y : invert(y);
          const OrbitComparison b = orbit_equal(sx_e, sy_e, cap);
          add("pairwise", detail::pow_name("sigma(" + xk + ")", e1) + " vs " + detail::pow_name("sigma(" + xl + ")", e2),
              !b.equal, b.reason);
          const OrbitComparison c1 = orbit_equal(x_e, sy_e, cap);
          add("pairwise", detail::pow_name(xk, e1) + " vs " + detail::pow_name("sigma(" + xl + ")", e2), !c1.equal, c1.reason);
          const OrbitComparison c2 = orbit_equal(y_e, sx_e, cap);
          add("pairwise", detail::pow_name(xl, e2) + " vs " + detail::pow_name("sigma(" + xk + ")", e1), !c2.equal, c2.reason);
        }
      }
    }
  }
  return rep;
}

}  // namespace freeaut

#endif  // FREEAUT_FAMILY_HPP
