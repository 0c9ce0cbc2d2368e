#ifndef FREEAUT_STABILIZER_HPP
#define FREEAUT_STABILIZER_HPP

// McCool graph of a conjugacy class: vertices are the minimal-length classes
// of its orbit, directed edges are the non-identity elementary moves between
// them. Labels read along loops at the basepoint generate the stabilizer of
// the basepoint class; we return the fundamental-loop basis with respect to
// the BFS spanning tree, one generator per non-tree edge.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "freeaut/automorphism.hpp"
#include "freeaut/orbit.hpp"

namespace freeaut {

class McCoolGraph {
 public:
  explicit McCoolGraph(LevelSet level) : level_(std::move(level)) {
    tree_.reserve(level_.size());
    for (std::size_t i = 0; i < level_.size(); ++i) {
      if (i == 0) {
        tree_.push_back(Automorphism::identity(level_.rank()));
      } else {
        const std::size_t p = level_.parent(i);
        tree_.push_back(compose(Automorphism::from_move(level_.move(level_.parent_move(i))), tree_[p]));
      }
    }
  }

  const LevelSet& level_set() const noexcept { return level_; }
  const CyclicWord& basepoint() const { return level_.basepoint(); }
  std::size_t vertex_count() const noexcept { return level_.size(); }
  const std::vector<LevelSetEdge>& edges() const noexcept { return level_.edges(); }
  const ElementaryMove& label(const LevelSetEdge& e) const { return level_.move(e.move); }

  // Maps the basepoint class onto vertex i along the spanning tree.
  const Automorphism& tree_automorphism(std::size_t i) const { return tree_[i]; }

 private:
  LevelSet level_;
  std::vector<Automorphism> tree_;
};

inline McCoolGraph build_mccool_graph(const CyclicWord& c, std::size_t cap = kDefaultCap) {
  return McCoolGraph(minimal_level_set(c, cap, /*record_edges=*/true));
}

// tree(to)^-1 o label o tree(from) for every non-tree edge. Each generator is
// checked to fix the basepoint class.
inline std::vector<Automorphism> loop_generators(const McCoolGraph& g) {
  std::vector<Automorphism> out;
  const CyclicWord& base = g.basepoint();
  for (const auto& e : g.edges()) {
    if (e.tree) continue;
    Automorphism gen = compose(inverse(g.tree_automorphism(e.to)),
                               compose(Automorphism::from_move(g.label(e)), g.tree_automorphism(e.from)));
    if (gen.apply(base) != base) throw InconsistencyError("loop generator does not fix the basepoint class");
    out.push_back(std::move(gen));
  }
  return out;
}

inline bool stabilizer_in_aut_plus(const std::vector<Automorphism>& generators) {
  for (const auto& gen : generators)
    if (abelian_determinant(gen) != 1) return false;
  return true;
}

inline bool stabilizer_in_aut_plus(const McCoolGraph& g) { return stabilizer_in_aut_plus(loop_generators(g)); }

// Same orbit under the determinant-one subgroup Aut+(F_n). Every witness is
// w o s with s in the stabilizer of u's class, so a determinant -1 witness can
// be corrected iff that stabilizer leaves Aut+.
inline OrbitComparison orbit_equal_aut_plus(const Word& u, const Word& v, std::size_t cap = kDefaultCap) {
  OrbitComparison r = orbit_equal(u, v, cap);
  if (!r.equal) return r;
  if (abelian_determinant(*r.witness) == 1) {
    r.reason = "Aut witness already has determinant 1";
    return r;
  }
  const ReductionTrace tu = reduce_to_minimal(u);
  const McCoolGraph g = build_mccool_graph(tu.minimal, cap);
  const Automorphism to_min = tu.automorphism();
  for (const auto& s : loop_generators(g)) {
    if (abelian_determinant(s) == 1) continue;
    // s fixes the class of tu.minimal; conjugate it back to u's class.
    Automorphism fixed = compose(inverse(to_min), compose(s, to_min));
    Automorphism w = compose(*r.witness, fixed);
    if (cyclic_word(w.apply(u)) != cyclic_word(v)) throw InconsistencyError("corrected Aut+ witness is invalid");
    return {true, std::move(w), "corrected by a determinant -1 stabilizer element"};
  }
  return {false, std::nullopt, "every witness has determinant -1 (class stabilizer lies in Aut+)"};
}

inline std::string to_dot(const McCoolGraph& g, const std::string& name = "mccool") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    os << "  v" << i << " [label=\"" << to_string(g.level_set()[i], true) << "\"" << (i == 0 ? ", shape=box" : "")
       << "];\n";
  for (const auto& e : g.edges())
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << describe(g.label(e)) << "\""
       << (e.tree ? ", style=bold" : "") << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace freeaut

#endif  // FREEAUT_STABILIZER_HPP
