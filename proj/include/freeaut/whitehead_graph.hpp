#ifndef FREEAUT_WHITEHEAD_GRAPH_HPP
#define FREEAUT_WHITEHEAD_GRAPH_HPP

// Whitehead graph of a cyclic word: 2n vertices (one per letter, vertex id =
// Generator::code()), and for each cyclically consecutive pair (w_i, w_{i+1})
// one edge {w_i, w_{i+1}^-1}.
//
// Connectivity is taken over all 2n vertices, so a word that omits a
// generator always has a disconnected graph. Cut vertices follow the
// "removal strictly increases the component count" definition; isolated
// vertices count as components.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "freeaut/word.hpp"

namespace freeaut {

class WhiteheadGraph {
 public:
  explicit WhiteheadGraph(int rank)
      : rank_(rank), n_(2 * rank), mult_(static_cast<std::size_t>(n_ * n_), 0) {
    detail::check_rank(rank);
  }

  int rank() const noexcept { return rank_; }
  int vertex_count() const noexcept { return n_; }

  std::uint32_t multiplicity(int u, int v) const { return mult_[idx(u, v)]; }

  void add_edge(int u, int v, std::uint32_t count = 1) {
    mult_[idx(u, v)] += count;
    if (u != v) mult_[idx(v, u)] += count;
  }

  // Loops count once.
  std::uint64_t edge_count() const {
    std::uint64_t total = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = u; v < n_; ++v) total += multiplicity(u, v);
    return total;
  }

  // Loops contribute 2.
  std::uint64_t degree(int v) const {
    std::uint64_t d = 0;
    for (int u = 0; u < n_; ++u) d += multiplicity(v, u);
    return d + multiplicity(v, v);
  }

  // Number of edges with exactly one end in the vertex set given by `mask`.
  std::uint64_t cut_size(std::uint64_t mask) const {
    std::uint64_t c = 0;
    for (int u = 0; u < n_; ++u) {
      if (!(mask >> u & 1)) continue;
      for (int v = 0; v < n_; ++v)
        if (!(mask >> v & 1)) c += multiplicity(u, v);
    }
    return c;
  }

  bool is_connected() const { return component_count(-1) == 1; }

  // Components after deleting `removed` (-1 keeps every vertex).
  int component_count(int removed) const {
    std::vector<int> seen(static_cast<std::size_t>(n_), 0);
    int comps = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
      if (s == removed || seen[s]) continue;
      ++comps;
      seen[s] = 1;
      stack.push_back(s);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n_; ++v) {
          if (v == removed || seen[v] || multiplicity(u, v) == 0) continue;
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    return comps;
  }

  // Articulation points via DFS low-links on the underlying simple graph.
  std::vector<int> cut_vertices() const {
    std::vector<int> disc(static_cast<std::size_t>(n_), -1), low(static_cast<std::size_t>(n_), 0);
    std::vector<char> is_cut(static_cast<std::size_t>(n_), 0);
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
      disc[u] = low[u] = timer++;
      int children = 0;
      for (int v = 0; v < n_; ++v) {
        if (v == u || multiplicity(u, v) == 0) continue;
        if (disc[v] == -1) {
          ++children;
          dfs(v, u);
          low[u] = std::min(low[u], low[v]);
          if (parent != -1 && low[v] >= disc[u]) is_cut[u] = 1;
        } else if (v != parent) {
          low[u] = std::min(low[u], disc[v]);
        }
      }
      if (parent == -1 && children > 1) is_cut[u] = 1;
    };
    for (int s = 0; s < n_; ++s)
      if (disc[s] == -1) dfs(s, -1);
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if (is_cut[v]) out.push_back(v);
    return out;
  }

  // Connected with no cut vertex: the hypothesis of the Brooks certificate.
  bool is_biconnected() const { return is_connected() && cut_vertices().empty(); }

  // Every edge of `other` is present here (multiplicity >= 1).
  bool contains_edges_of(const WhiteheadGraph& other) const {
    detail::check_same_rank(rank_, other.rank_);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (other.multiplicity(u, v) > 0 && multiplicity(u, v) == 0) return false;
    return true;
  }

  struct Edge {
    int u;
    int v;
    std::uint32_t multiplicity;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  // Edges with u <= v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u; v < n_; ++v)
        if (auto m = multiplicity(u, v)) out.push_back({u, v, m});
    return out;
  }

  friend bool operator==(const WhiteheadGraph&, const WhiteheadGraph&) = default;

 private:
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u * n_ + v); }

  int rank_;
  int n_;
  std::vector<std::uint32_t> mult_;
};

// "a" for a generator, "a'" for its inverse.
inline std::string vertex_label(int v) {
  Generator g = Generator::from_code(v);
  std::string s(1, static_cast<char>('a' + g.index));
  if (!g.positive()) s += '\'';
  return s;
}

inline void add_pair_edge(WhiteheadGraph& g, Generator cur, Generator next) {
  g.add_edge(cur.code(), next.inverse().code());
}

inline WhiteheadGraph build_whitehead_graph(const CyclicWord& c) {
  WhiteheadGraph g(c.rank());
  const auto s = c.letters();
  for (std::size_t i = 0; i < s.size(); ++i) add_pair_edge(g, s[i], s[(i + 1) % s.size()]);
  return g;
}

// Graph of a word taken through its cyclic reduction.
inline WhiteheadGraph build_whitehead_graph(const Word& w) { return build_whitehead_graph(cyclic_word(w)); }

// Linearly consecutive pairs only (no wrap-around edge). Used to reason about
// subword containment.
inline WhiteheadGraph build_linear_pair_graph(const Word& w) {
  WhiteheadGraph g(w.rank());
  const auto s = w.letters();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) add_pair_edge(g, s[i], s[i + 1]);
  return g;
}

inline std::string to_dot(const WhiteheadGraph& g, const std::string& name = "whitehead") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  \"" << vertex_label(v) << "\";\n";
  for (const auto& e : g.edges())
    for (std::uint32_t k = 0; k < e.multiplicity; ++k)
      os << "  \"" << vertex_label(e.u) << "\" -- \"" << vertex_label(e.v) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace freeaut

#endif  // FREEAUT_WHITEHEAD_GRAPH_HPP
