#ifndef FREEAUT_AUTOMORPHISM_HPP
#define FREEAUT_AUTOMORPHISM_HPP

// Automorphisms of F_n built from elementary moves.
//
// An Automorphism can only be obtained from elementary moves (permutation or
// Whitehead) and their compositions and inverses, so every value is a genuine
// automorphism and carries the factorization that proves it.
//
// Whitehead move with multiplier m: m is fixed (so is its underlying
// generator) and each other generator x goes to one of
//   Fix: x   Left: m x   Right: x m^-1   Conjugate: m x m^-1.
// Its inverse is the move with multiplier m^-1 and the same action pattern.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "freeaut/errors.hpp"
#include "freeaut/word.hpp"

namespace freeaut {

enum class Action : std::uint8_t { Fix = 0, Left = 1, Right = 2, Conjugate = 3 };

inline const char* action_name(Action a) {
  switch (a) {
    case Action::Fix: return "fix";
    case Action::Left: return "left";
    case Action::Right: return "right";
    case Action::Conjugate: return "conjugate";
  }
  return "?";
}

inline Action parse_action(const std::string& s) {
  if (s == "fix") return Action::Fix;
  if (s == "left") return Action::Left;
  if (s == "right") return Action::Right;
  if (s == "conjugate") return Action::Conjugate;
  throw PreconditionError("unknown Whitehead action '" + s + "'");
}

// Signed permutation: generator i goes to images[i].
struct PermutationMove {
  std::vector<Generator> images;
  friend bool operator==(const PermutationMove&, const PermutationMove&) = default;
};

struct WhiteheadMove {
  Generator multiplier;
  std::vector<Action> actions;  // one per generator; Fix at multiplier.index
  friend bool operator==(const WhiteheadMove&, const WhiteheadMove&) = default;
};

using ElementaryMove = std::variant<PermutationMove, WhiteheadMove>;

inline bool is_permutation(const ElementaryMove& m) { return std::holds_alternative<PermutationMove>(m); }

inline int move_rank(const ElementaryMove& m) {
  return std::visit(
      [](const auto& mv) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(mv)>, PermutationMove>)
          return static_cast<int>(mv.images.size());
        else
          return static_cast<int>(mv.actions.size());
      },
      m);
}

inline void validate_move(const ElementaryMove& m) {
  const int rank = move_rank(m);
  detail::check_rank(rank);
  if (const auto* p = std::get_if<PermutationMove>(&m)) {
    std::vector<char> hit(static_cast<std::size_t>(rank), 0);
    for (Generator g : p->images) {
      detail::check_letter(rank, g);
      if (hit[g.index]++) throw PreconditionError("permutation move is not a bijection");
    }
  } else {
    const auto& w = std::get<WhiteheadMove>(m);
    detail::check_letter(rank, w.multiplier);
    if (w.actions[w.multiplier.index] != Action::Fix)
      throw PreconditionError("Whitehead move must fix its multiplier");
  }
}

inline Word move_image(const ElementaryMove& m, int i) {
  const int rank = move_rank(m);
  if (const auto* p = std::get_if<PermutationMove>(&m)) return Word(rank, {p->images[i]});
  const auto& w = std::get<WhiteheadMove>(m);
  const Generator x(i, 1);
  const Generator a = w.multiplier;
  switch (w.actions[i]) {
    case Action::Fix: return Word(rank, {x});
    case Action::Left: return Word(rank, {a, x});
    case Action::Right: return Word(rank, {x, a.inverse()});
    case Action::Conjugate: return Word(rank, {a, x, a.inverse()});
  }
  return Word(rank, {x});
}

inline ElementaryMove inverse_move(const ElementaryMove& m) {
  if (const auto* p = std::get_if<PermutationMove>(&m)) {
    PermutationMove inv{std::vector<Generator>(p->images.size())};
    for (std::size_t i = 0; i < p->images.size(); ++i) {
      const Generator g = p->images[i];
      inv.images[g.index] = Generator(static_cast<int>(i), g.sign);
    }
    return inv;
  }
  WhiteheadMove w = std::get<WhiteheadMove>(m);
  w.multiplier = w.multiplier.inverse();
  return w;
}

inline bool is_identity_move(const ElementaryMove& m) {
  if (const auto* p = std::get_if<PermutationMove>(&m)) {
    for (std::size_t i = 0; i < p->images.size(); ++i)
      if (p->images[i] != Generator(static_cast<int>(i), 1)) return false;
    return true;
  }
  const auto& w = std::get<WhiteheadMove>(m);
  return std::all_of(w.actions.begin(), w.actions.end(), [](Action a) { return a == Action::Fix; });
}

// e.g. "perm{a->B,b->a}" or "wh[B]{a->ab}"; fixed generators are omitted.
inline std::string describe(const ElementaryMove& m) {
  const int rank = move_rank(m);
  std::string s;
  if (const auto* w = std::get_if<WhiteheadMove>(&m)) {
    s = "wh[";
    s += letter_char(w->multiplier);
    s += "]{";
  } else {
    s = "perm{";
  }
  bool first = true;
  for (int i = 0; i < rank; ++i) {
    Word img = move_image(m, i);
    if (img == generator_word(rank, i)) continue;
    if (!first) s += ',';
    first = false;
    s += static_cast<char>('a' + i);
    s += "->";
    s += to_string(img);
  }
  s += '}';
  return s;
}

class Automorphism {
 public:
  static Automorphism identity(int rank) {
    detail::check_rank(rank);
    std::vector<Word> images;
    for (int i = 0; i < rank; ++i) images.push_back(generator_word(rank, i));
    return Automorphism(rank, std::move(images), {});
  }

  static Automorphism from_move(const ElementaryMove& m) {
    validate_move(m);
    const int rank = move_rank(m);
    std::vector<Word> images;
    for (int i = 0; i < rank; ++i) images.push_back(move_image(m, i));
    return Automorphism(rank, std::move(images), {m});
  }

  static Automorphism from_moves(int rank, const std::vector<ElementaryMove>& moves) {
    Automorphism acc = identity(rank);
    for (const auto& m : moves) acc = compose(from_move(m), acc);
    return acc;
  }

  int rank() const noexcept { return rank_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(int i) const { return images_[static_cast<std::size_t>(i)]; }
  // Moves in application order: the automorphism is moves.back() o ... o moves.front().
  const std::vector<ElementaryMove>& factorization() const noexcept { return factorization_; }

  bool is_identity() const {
    for (int i = 0; i < rank_; ++i)
      if (images_[i] != generator_word(rank_, i)) return false;
    return true;
  }

  Word apply(const Word& w) const {
    detail::check_same_rank(rank_, w.rank());
    std::vector<Generator> out;
    out.reserve(w.size() * 2);
    for (Generator g : w.letters()) {
      const Word& img = g.positive() ? images_[g.index] : inverse_images_[g.index];
      for (Generator h : img.letters()) detail::push_reduced(out, h);
    }
    return Word(rank_, out);
  }

  // Action on conjugacy classes.
  CyclicWord apply(const CyclicWord& c) const { return cyclic_word(apply(c.as_word())); }

  friend Automorphism compose(const Automorphism& psi, const Automorphism& phi);
  friend Automorphism inverse(const Automorphism& psi);

  // Images and factorization both match.
  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.rank_ == b.rank_ && a.images_ == b.images_ && a.factorization_ == b.factorization_;
  }

 private:
  Automorphism(int rank, std::vector<Word> images, std::vector<ElementaryMove> factorization)
      : rank_(rank), images_(std::move(images)), factorization_(std::move(factorization)) {
    inverse_images_.reserve(images_.size());
    for (const auto& img : images_) inverse_images_.push_back(invert(img));
  }

  int rank_;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
  std::vector<ElementaryMove> factorization_;
};

// psi o phi: apply phi first.
inline Automorphism compose(const Automorphism& psi, const Automorphism& phi) {
  detail::check_same_rank(psi.rank_, phi.rank_);
  std::vector<Word> images;
  images.reserve(phi.images_.size());
  for (const auto& img : phi.images_) images.push_back(psi.apply(img));
  std::vector<ElementaryMove> fact = phi.factorization_;
  fact.insert(fact.end(), psi.factorization_.begin(), psi.factorization_.end());
  return Automorphism(psi.rank_, std::move(images), std::move(fact));
}

inline Automorphism inverse(const Automorphism& psi) {
  Automorphism acc = Automorphism::identity(psi.rank_);
  for (auto it = psi.factorization_.rbegin(); it != psi.factorization_.rend(); ++it)
    acc = compose(Automorphism::from_move(inverse_move(*it)), acc);
  for (int i = 0; i < psi.rank_; ++i) {
    if (acc.apply(psi.images_[i]) != generator_word(psi.rank_, i))
      throw InconsistencyError("inverse automorphism failed its post-check");
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Enumerations. Order is fixed: permutations of the generator indices in
// lexicographic order, then sign masks (bit i negates generator i); Whitehead
// moves by multiplier code (a, A, b, B, ...), then action patterns read as a
// base-4 number, lowest generator index most significant.

inline std::vector<PermutationMove> enumerate_permutation_moves(int rank) {
  detail::check_rank(rank);
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PermutationMove> out;
  do {
    for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) {
      PermutationMove m;
      for (int i = 0; i < rank; ++i) m.images.emplace_back(perm[i], (mask >> i & 1) ? -1 : 1);
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Identity patterns are kept (one per multiplier).
inline std::vector<WhiteheadMove> enumerate_whitehead_moves(int rank) {
  detail::check_rank(rank);
  if (rank < 2) throw PreconditionError("Whitehead moves need rank >= 2");
  std::vector<WhiteheadMove> out;
  const std::uint64_t patterns = std::uint64_t{1} << (2 * (rank - 1));
  for (int code = 0; code < 2 * rank; ++code) {
    const Generator a = Generator::from_code(code);
    for (std::uint64_t p = 0; p < patterns; ++p) {
      WhiteheadMove m{a, std::vector<Action>(static_cast<std::size_t>(rank), Action::Fix)};
      int digit = rank - 2;
      for (int i = 0; i < rank; ++i) {
        if (i == a.index) continue;
        m.actions[i] = static_cast<Action>((p >> (2 * digit)) & 3);
        --digit;
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

inline std::vector<Automorphism> enumerate_permutation_autos(int rank) {
  std::vector<Automorphism> out;
  for (auto& m : enumerate_permutation_moves(rank)) out.push_back(Automorphism::from_move(m));
  return out;
}

inline std::vector<Automorphism> enumerate_whitehead_autos(int rank) {
  std::vector<Automorphism> out;
  for (auto& m : enumerate_whitehead_moves(rank)) out.push_back(Automorphism::from_move(m));
  return out;
}

// All elementary moves: permutations first, then Whitehead moves (none in rank 1).
inline std::vector<ElementaryMove> enumerate_elementary_moves(int rank) {
  std::vector<ElementaryMove> out;
  for (auto& m : enumerate_permutation_moves(rank)) out.emplace_back(std::move(m));
  if (rank >= 2)
    for (auto& m : enumerate_whitehead_moves(rank)) out.emplace_back(std::move(m));
  return out;
}

// Vertex set A and distinguished letter of the classical (A, a) description
// of a Whitehead move, in Whitehead-graph vertex ids. With these the cyclic
// length of the image is |w| + cut(A) - deg(a).
struct WhiteheadCut {
  std::uint64_t mask = 0;
  int pivot = 0;
};

inline WhiteheadCut whitehead_cut(const WhiteheadMove& m) {
  // x -> x m^-1 puts x in A; x -> m x puts x^-1 in A; pivot is m^-1.
  const Generator pivot = m.multiplier.inverse();
  WhiteheadCut c;
  c.pivot = pivot.code();
  c.mask |= std::uint64_t{1} << pivot.code();
  for (std::size_t i = 0; i < m.actions.size(); ++i) {
    const Generator x(static_cast<int>(i), 1);
    switch (m.actions[i]) {
      case Action::Fix: break;
      case Action::Left: c.mask |= std::uint64_t{1} << x.inverse().code(); break;
      case Action::Right: c.mask |= std::uint64_t{1} << x.code(); break;
      case Action::Conjugate:
        c.mask |= std::uint64_t{1} << x.code();
        c.mask |= std::uint64_t{1} << x.inverse().code();
        break;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Abelianization.

class IntMatrix {
 public:
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const noexcept { return n_; }
  std::int64_t& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  std::int64_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    detail::check_same_rank(x.n_, y.n_);
    IntMatrix r(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k)
        for (int j = 0; j < x.n_; ++j) r(i, j) += x(i, k) * y(k, j);
    return r;
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_;
  std::vector<std::int64_t> a_;
};

// Exact integer determinant (fraction-free Bareiss elimination).
inline std::int64_t determinant(const IntMatrix& m) {
  const int n = m.size();
  if (n == 0) return 1;
  std::vector<__int128> a(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r * n + c] = m(r, c);
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r * n + k] != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a[k * n + c], a[swap * n + c]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  return sign * static_cast<std::int64_t>(a[(n - 1) * n + (n - 1)]);
}

// Column i is the exponent-sum vector of the image of generator i.
inline IntMatrix abelianization_matrix(const Automorphism& psi) {
  IntMatrix m(psi.rank());
  for (int i = 0; i < psi.rank(); ++i) {
    const AbelianVector v = abelianize(psi.image(i));
    for (int r = 0; r < psi.rank(); ++r) m(r, i) = v[r];
  }
  return m;
}

inline std::int64_t abelian_determinant(const Automorphism& psi) {
  return determinant(abelianization_matrix(psi));
}

// ---------------------------------------------------------------------------
// Named rank-2 automorphisms. Together they generate Aut(F_2).

namespace rank2 {

// a -> a^-1, b -> b
inline Automorphism sigma() { return Automorphism::from_move(PermutationMove{{Generator(0, -1), Generator(1, 1)}}); }

// a -> b, b -> a
inline Automorphism swap() { return Automorphism::from_move(PermutationMove{{Generator(1, 1), Generator(0, 1)}}); }

// a -> ab, b -> b
inline Automorphism transvection() {
  return Automorphism::from_move(WhiteheadMove{Generator(1, -1), {Action::Right, Action::Fix}});
}

}  // namespace rank2

}  // namespace freeaut

#endif  // FREEAUT_AUTOMORPHISM_HPP
