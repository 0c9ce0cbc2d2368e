#ifndef FREEAUT_ORBIT_HPP
#define FREEAUT_ORBIT_HPP

// Whitehead's algorithm on conjugacy classes.
//
// reduce_to_minimal performs steepest descent over all Whitehead moves until
// no move shortens the cyclic word; the result has the least cyclic length
// in its Aut(F_n)-orbit. minimal_level_set then explores, by BFS, every class
// of that length reachable through permutation moves and length-preserving
// Whitehead moves. Two classes of minimal length lie in the same orbit iff
// they lie in the same level set.
//
// Element-level orbit questions reduce to conjugacy classes because inner
// automorphisms are automorphisms.

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "freeaut/automorphism.hpp"
#include "freeaut/errors.hpp"
#include "freeaut/whitehead_graph.hpp"
#include "freeaut/word.hpp"

namespace freeaut {

inline constexpr std::size_t kDefaultCap = 200'000;

// Per-rank move tables, built once. Permutations first, then Whitehead moves.
struct MoveTable {
  int rank = 0;
  std::vector<ElementaryMove> moves;
  std::vector<Automorphism> autos;
  std::vector<WhiteheadCut> cuts;  // aligned with moves[permutation_count ...]
  std::size_t permutation_count = 0;

  std::size_t whitehead_count() const { return moves.size() - permutation_count; }
};

namespace detail {

inline MoveTable make_move_table(int rank, bool with_permutations) {
  MoveTable t;
  t.rank = rank;
  if (with_permutations) {
    for (auto& m : enumerate_permutation_moves(rank)) {
      t.autos.push_back(Automorphism::from_move(m));
      t.moves.emplace_back(std::move(m));
    }
  }
  t.permutation_count = t.moves.size();
  if (rank >= 2) {
    for (auto& m : enumerate_whitehead_moves(rank)) {
      t.cuts.push_back(whitehead_cut(m));
      t.autos.push_back(Automorphism::from_move(m));
      t.moves.emplace_back(std::move(m));
    }
  }
  return t;
}

template <bool WithPermutations>
const MoveTable& cached_move_table(int rank) {
  check_rank(rank);
  static std::array<std::unique_ptr<MoveTable>, kMaxRank + 1> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[static_cast<std::size_t>(rank)];
  if (!slot) slot = std::make_unique<MoveTable>(make_move_table(rank, WithPermutations));
  return *slot;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Portable bounded draw; the std distributions are not specified bit-exactly.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace detail

// Every elementary move (permutations + Whitehead).
inline const MoveTable& full_move_table(int rank) { return detail::cached_move_table<true>(rank); }
// Whitehead moves only.
inline const MoveTable& whitehead_move_table(int rank) { return detail::cached_move_table<false>(rank); }

// Cyclic length of the image of a class under a Whitehead move, read off its
// Whitehead graph without applying the move.
inline std::int64_t whitehead_image_length(const WhiteheadGraph& g, std::size_t length, const WhiteheadCut& cut) {
  return static_cast<std::int64_t>(length) + static_cast<std::int64_t>(g.cut_size(cut.mask)) -
         static_cast<std::int64_t>(g.degree(cut.pivot));
}

struct ReductionStep {
  ElementaryMove move;
  CyclicWord result;
};

struct ReductionTrace {
  CyclicWord start;
  std::vector<ReductionStep> steps;
  CyclicWord minimal;

  // Maps the start class onto the minimal class.
  Automorphism automorphism() const {
    std::vector<ElementaryMove> moves;
    for (const auto& s : steps) moves.push_back(s.move);
    return Automorphism::from_moves(start.rank(), moves);
  }
};

inline ReductionTrace reduce_to_minimal(const CyclicWord& c) {
  ReductionTrace trace{c, {}, c};
  if (c.rank() < 2 || c.empty()) return trace;
  const MoveTable& table = whitehead_move_table(c.rank());
  CyclicWord cur = c;
  for (;;) {
    const WhiteheadGraph g = build_whitehead_graph(cur);
    std::int64_t best = static_cast<std::int64_t>(cur.size());
    std::optional<std::size_t> best_move;
    for (std::size_t i = 0; i < table.cuts.size(); ++i) {
      const std::int64_t len = whitehead_image_length(g, cur.size(), table.cuts[i]);
      if (len < best) {
        best = len;
        best_move = i;
      }
    }
    if (!best_move) break;
    CyclicWord next = table.autos[table.permutation_count + *best_move].apply(cur);
    if (static_cast<std::int64_t>(next.size()) != best)
      throw InconsistencyError("Whitehead length formula disagrees with direct application");
    trace.steps.push_back({table.moves[table.permutation_count + *best_move], next});
    cur = std::move(next);
  }
  trace.minimal = cur;
  return trace;
}

inline ReductionTrace reduce_to_minimal(const Word& w) { return reduce_to_minimal(cyclic_word(w)); }

// ---------------------------------------------------------------------------

struct LevelSetEdge {
  std::size_t from;
  std::size_t move;  // index into full_move_table(rank).moves
  std::size_t to;
  bool tree;
};

class LevelSet {
 public:
  explicit LevelSet(const CyclicWord& basepoint) : rank_(basepoint.rank()) { insert(basepoint, npos, 0); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return classes_.size(); }
  std::size_t length() const noexcept { return classes_.front().size(); }
  const CyclicWord& basepoint() const { return classes_.front(); }
  const std::vector<CyclicWord>& classes() const noexcept { return classes_; }
  const CyclicWord& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<LevelSetEdge>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> find(const CyclicWord& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t parent(std::size_t i) const { return parent_[i]; }
  std::size_t parent_move(std::size_t i) const { return parent_move_[i]; }

  const ElementaryMove& move(std::size_t id) const { return full_move_table(rank_).moves[id]; }

  // Spanning-tree moves from the basepoint to class i, in application order.
  std::vector<ElementaryMove> path_from_basepoint(std::size_t i) const {
    std::vector<ElementaryMove> rev;
    for (std::size_t v = i; parent_[v] != npos; v = parent_[v]) rev.push_back(move(parent_move_[v]));
    return {rev.rbegin(), rev.rend()};
  }

  // Maps the basepoint class onto class i.
  Automorphism tree_automorphism(std::size_t i) const { return Automorphism::from_moves(rank_, path_from_basepoint(i)); }

 private:
  friend LevelSet minimal_level_set(const CyclicWord&, std::size_t, bool);

  std::size_t insert(const CyclicWord& c, std::size_t parent, std::size_t move) {
    const std::size_t id = classes_.size();
    classes_.push_back(c);
    parent_.push_back(parent);
    parent_move_.push_back(move);
    index_.emplace(c, id);
    return id;
  }

  int rank_;
  std::vector<CyclicWord> classes_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_move_;
  std::vector<LevelSetEdge> edges_;
  std::unordered_map<CyclicWord, std::size_t, CyclicWordHash> index_;
};

// BFS over the minimal-length classes of the orbit of c. With record_edges,
// every non-identity elementary move between classes is stored (self-loops
// included); tree edges are the ones that discovered a class.
inline LevelSet minimal_level_set(const CyclicWord& c, std::size_t cap = kDefaultCap, bool record_edges = false) {
  if (cap < 1) throw PreconditionError("cap must be >= 1");
  const CyclicWord start = reduce_to_minimal(c).minimal;
  const MoveTable& table = full_move_table(c.rank());
  LevelSet ls(start);
  const std::size_t m = start.size();
  for (std::size_t head = 0; head < ls.size(); ++head) {
    const CyclicWord cur = ls[head];
    const WhiteheadGraph g = build_whitehead_graph(cur);
    for (std::size_t id = 0; id < table.moves.size(); ++id) {
      if (id >= table.permutation_count) {
        const std::int64_t len = whitehead_image_length(g, m, table.cuts[id - table.permutation_count]);
        if (len < static_cast<std::int64_t>(m))
          throw InconsistencyError("level set basepoint is not of minimal length");
        if (len > static_cast<std::int64_t>(m)) continue;
      }
      if (is_identity_move(table.moves[id])) continue;
      CyclicWord img = table.autos[id].apply(cur);
      auto found = ls.find(img);
      std::size_t to;
      bool tree = false;
      if (found) {
        to = *found;
      } else {
        if (ls.size() >= cap) throw CapExceeded(cap, ls.size() + 1);
        to = ls.insert(img, head, id);
        tree = true;
      }
      if (record_edges) ls.edges_.push_back({head, id, to, tree});
    }
  }
  return ls;
}

// ---------------------------------------------------------------------------

struct OrbitComparison {
  bool equal = false;
  std::optional<Automorphism> witness;  // maps the first word into the conjugacy class of the second
  std::string reason;
};

inline OrbitComparison orbit_equal(const Word& u, const Word& v, std::size_t cap = kDefaultCap) {
  detail::check_same_rank(u.rank(), v.rank());
  const int rank = u.rank();
  if (u.empty() || v.empty()) {
    if (u.empty() && v.empty()) return {true, Automorphism::identity(rank), "both trivial"};
    return {false, std::nullopt, "exactly one word is trivial"};
  }
  if (abelianize(u).content() != abelianize(v).content())
    return {false, std::nullopt, "abelianization gcd differs"};
  const ReductionTrace tu = reduce_to_minimal(u);
  const ReductionTrace tv = reduce_to_minimal(v);
  if (tu.minimal.size() != tv.minimal.size()) return {false, std::nullopt, "minimal lengths differ"};
  const LevelSet ls = minimal_level_set(tu.minimal, cap);
  const auto hit = ls.find(tv.minimal);
  if (!hit) return {false, std::nullopt, "minimal class not in level set"};
  Automorphism witness = compose(inverse(tv.automorphism()), compose(ls.tree_automorphism(*hit), tu.automorphism()));
  if (cyclic_word(witness.apply(u)) != cyclic_word(v))
    throw InconsistencyError("orbit witness does not map u onto the class of v");
  return {true, std::move(witness), "level set contains both"};
}

inline bool is_primitive(const Word& w) {
  if (w.empty()) throw PreconditionError("is_primitive: empty word");
  if (w.rank() == 1) return w.size() == 1;
  return reduce_to_minimal(w).minimal.size() == 1;
}

struct SeparabilityResult {
  bool separable = false;
  ReductionTrace trace;
  WhiteheadGraph graph;  // of trace.minimal
  bool connected = false;
  std::vector<int> cut_vertices;
};

inline SeparabilityResult is_separable(const Word& w) {
  if (w.empty()) throw PreconditionError("is_separable: empty word");
  ReductionTrace trace = reduce_to_minimal(w);
  WhiteheadGraph g = build_whitehead_graph(trace.minimal);
  const bool connected = g.is_connected();
  std::vector<int> cuts = g.cut_vertices();
  if (w.rank() == 1) return {false, std::move(trace), std::move(g), connected, std::move(cuts)};
  if (connected && !cuts.empty())
    throw InconsistencyError("minimal word " + to_string(trace.minimal) + " has a connected Whitehead graph with a cut vertex");
  const bool separable = !connected;
  return {separable, std::move(trace), std::move(g), connected, std::move(cuts)};
}

// ---------------------------------------------------------------------------
// Seeded generators.

// Composition of `steps` elementary moves drawn uniformly from the full move table.
inline Automorphism random_automorphism(int rank, int steps, std::uint64_t seed) {
  const MoveTable& table = full_move_table(rank);
  std::mt19937_64 rng(seed);
  std::vector<ElementaryMove> moves;
  for (int s = 0; s < steps; ++s) moves.push_back(table.moves[detail::draw(rng, table.moves.size())]);
  return Automorphism::from_moves(rank, moves);
}

// Image of the generator a under a random composition of `steps` moves.
inline Word random_primitive(int rank, int steps, std::uint64_t seed) {
  if (steps < 0) throw PreconditionError("steps must be >= 0");
  const MoveTable& table = full_move_table(rank);
  std::mt19937_64 rng(seed);
  Word w = generator_word(rank, 0);
  for (int s = 0; s < steps; ++s) w = table.autos[detail::draw(rng, table.moves.size())].apply(w);
  return w;
}

// Uniform freely reduced word of exactly `length` letters.
inline Word random_word(int rank, std::size_t length, std::mt19937_64& rng) {
  std::vector<Generator> letters;
  while (letters.size() < length) {
    Generator g = Generator::from_code(static_cast<int>(detail::draw(rng, static_cast<std::uint64_t>(2 * rank))));
    if (!letters.empty() && letters.back() == g.inverse()) continue;
    letters.push_back(g);
  }
  return Word(rank, letters);
}

}  // namespace freeaut

#endif  // FREEAUT_ORBIT_HPP
