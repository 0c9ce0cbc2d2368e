#ifndef FREEAUT_WORD_HPP
#define FREEAUT_WORD_HPP

// Free group words over the standard basis a, b, c, ... of F_n.
//
// Letters are ordered by generator index, then positive before inverse, so
// a < A < b < B < ...  The same order defines the canonical (least) rotation
// of a cyclic word, which is the hash key for every orbit enumeration in the
// library. Changing it changes every canonical form.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freeaut/errors.hpp"

namespace freeaut {

inline constexpr int kMaxRank = 26;

struct Generator {
  std::uint8_t index = 0;
  std::int8_t sign = 1;

  constexpr Generator() = default;
  constexpr Generator(int idx, int sgn)
      : index(static_cast<std::uint8_t>(idx)), sign(static_cast<std::int8_t>(sgn < 0 ? -1 : 1)) {}

  // Dense code 2*index + (inverse ? 1 : 0); doubles as the Whitehead graph
  // vertex id.
  constexpr int code() const noexcept { return 2 * index + (sign < 0 ? 1 : 0); }
  static constexpr Generator from_code(int c) noexcept { return Generator(c / 2, (c & 1) ? -1 : 1); }
  constexpr Generator inverse() const noexcept { return Generator(index, -sign); }
  constexpr bool positive() const noexcept { return sign > 0; }

  friend constexpr bool operator==(Generator a, Generator b) noexcept {
    return a.index == b.index && a.sign == b.sign;
  }
  friend constexpr std::strong_ordering operator<=>(Generator a, Generator b) noexcept {
    return a.code() <=> b.code();
  }
};

inline char letter_char(Generator g) {
  char c = static_cast<char>('a' + g.index);
  return g.positive() ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

namespace detail {

inline void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw RankError("rank must be in [1, " + std::to_string(kMaxRank) + "], got " +
                    std::to_string(rank));
  }
}

inline void check_letter(int rank, Generator g) {
  if (g.index >= rank) {
    throw RankError(std::string("letter '") + letter_char(g) + "' is outside a basis of rank " +
                    std::to_string(rank));
  }
}

inline void check_same_rank(int r1, int r2) {
  if (r1 != r2) {
    throw RankError("rank mismatch: " + std::to_string(r1) + " vs " + std::to_string(r2));
  }
}

// Appends g to a reduced sequence, cancelling against the last letter.
inline void push_reduced(std::vector<Generator>& out, Generator g) {
  if (!out.empty() && out.back() == g.inverse()) {
    out.pop_back();
  } else {
    out.push_back(g);
  }
}

inline bool is_freely_reduced(std::span<const Generator> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] == letters[i - 1].inverse()) return false;
  }
  return true;
}

inline bool is_cyclically_reduced(std::span<const Generator> letters) {
  return is_freely_reduced(letters) &&
         (letters.size() < 2 || letters.front() != letters.back().inverse());
}

// Start offset of the lexicographically least rotation (two-pointer scan,
// linear time).
inline std::size_t least_rotation(std::span<const Generator> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Generator a = s[(i + k) % n];
    Generator b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

}  // namespace detail

// A freely reduced word. Construction always reduces.
class Word {
 public:
  explicit Word(int rank) : rank_(rank) { detail::check_rank(rank); }

  Word(int rank, std::span<const Generator> letters) : rank_(rank) {
    detail::check_rank(rank);
    letters_.reserve(letters.size());
    for (Generator g : letters) {
      detail::check_letter(rank, g);
      detail::push_reduced(letters_, g);
    }
  }

  Word(int rank, std::initializer_list<Generator> letters)
      : Word(rank, std::span<const Generator>(letters.begin(), letters.size())) {}

  int rank() const noexcept { return rank_; }
  std::span<const Generator> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Generator operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int rank_;
  std::vector<Generator> letters_;
};

// A cyclically reduced word stored as its least rotation: one representative
// per conjugacy class.
class CyclicWord {
 public:
  explicit CyclicWord(int rank) : rank_(rank) { detail::check_rank(rank); }

  int rank() const noexcept { return rank_; }
  std::span<const Generator> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Generator operator[](std::size_t i) const { return letters_[i]; }

  Word as_word() const { return Word(rank_, letters_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  // Shortlex; used only to make enumeration output deterministic.
  friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  friend CyclicWord canonical_rotation(int rank, std::span<const Generator> letters);
  int rank_;
  std::vector<Generator> letters_;
};

struct CyclicWordHash {
  std::size_t operator()(const CyclicWord& c) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(c.rank());
    for (Generator g : c.letters()) {
      h ^= static_cast<std::uint64_t>(g.code() + 1);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline Word free_reduce(int rank, std::span<const Generator> letters) { return Word(rank, letters); }

inline CyclicWord canonical_rotation(int rank, std::span<const Generator> letters) {
  detail::check_rank(rank);
  for (Generator g : letters) detail::check_letter(rank, g);
  if (!detail::is_cyclically_reduced(letters)) {
    throw PreconditionError("canonical_rotation: input is not cyclically reduced");
  }
  CyclicWord out(rank);
  const std::size_t s = detail::least_rotation(letters);
  out.letters_.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) out.letters_.push_back(letters[(s + i) % letters.size()]);
  return out;
}

inline Word invert(const Word& w) {
  std::vector<Generator> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(w.rank(), out);
}

inline Word concat(const Word& u, const Word& v) {
  detail::check_same_rank(u.rank(), v.rank());
  std::vector<Generator> out(u.letters().begin(), u.letters().end());
  for (Generator g : v.letters()) detail::push_reduced(out, g);
  return Word(u.rank(), out);
}

inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }

// w^n for any integer n; w^0 is the identity.
inline Word power(const Word& w, long long n) {
  if (n < 0) return power(invert(w), -n);
  Word acc(w.rank());
  Word base = w;
  while (n > 0) {
    if (n & 1) acc = concat(acc, base);
    n >>= 1;
    if (n > 0) base = concat(base, base);
  }
  return acc;
}

struct CyclicReduction {
  CyclicWord cyclic;
  Word conjugator;  // conjugator * cyclic * conjugator^-1 == input
};

inline CyclicReduction cyclic_reduce(const Word& w) {
  auto s = w.letters();
  std::size_t i = 0;
  std::size_t j = s.size();
  while (j - i >= 2 && s[i] == s[j - 1].inverse()) {
    ++i;
    --j;
  }
  auto core = s.subspan(i, j - i);
  const std::size_t rot = detail::least_rotation(core);
  // core = P Q with the canonical form Q P = P^-1 core P.
  std::vector<Generator> conj(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
  for (std::size_t t = 0; t < rot; ++t) detail::push_reduced(conj, core[t]);
  return {canonical_rotation(w.rank(), core), Word(w.rank(), conj)};
}

inline CyclicWord cyclic_word(const Word& w) { return cyclic_reduce(w).cyclic; }

inline Word conjugate(const Word& by, const Word& w) { return by * w * invert(by); }

class AbelianVector {
 public:
  explicit AbelianVector(int rank) : coords_(static_cast<std::size_t>(rank), 0) {}
  explicit AbelianVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  int rank() const noexcept { return static_cast<int>(coords_.size()); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

  // gcd of the coordinates; invariant under GL(n, Z).
  std::int64_t content() const {
    std::int64_t g = 0;
    for (auto c : coords_) g = std::gcd(g, c < 0 ? -c : c);
    return g;
  }

  friend AbelianVector operator+(const AbelianVector& a, const AbelianVector& b) {
    detail::check_same_rank(a.rank(), b.rank());
    AbelianVector r = a;
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
    return r;
  }
  friend AbelianVector operator-(const AbelianVector& a) {
    AbelianVector r = a;
    for (auto& c : r.coords_) c = -c;
    return r;
  }
  friend bool operator==(const AbelianVector&, const AbelianVector&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

inline AbelianVector abelianize(const Word& w) {
  AbelianVector v(w.rank());
  for (Generator g : w.letters()) v[g.index] += g.sign;
  return v;
}

// Grammar: [a-z] generator, [A-Z] its inverse, optional ^k (k >= 1) after a
// letter; whitespace ignored.
inline Word parse_word(std::string_view text, int rank) {
  detail::check_rank(rank);
  std::vector<Generator> letters;
  std::size_t i = 0;
  bool have_letter = false;
  Generator last;
  while (i < text.size()) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    if (std::islower(ch) || std::isupper(ch)) {
      const bool upper = std::isupper(ch) != 0;
      const int idx = (upper ? std::tolower(ch) : ch) - 'a';
      last = Generator(idx, upper ? -1 : 1);
      detail::check_letter(rank, last);
      letters.push_back(last);
      have_letter = true;
      ++i;
      continue;
    }
    if (ch == '^') {
      if (!have_letter) throw SyntaxError("'^' must follow a letter", i);
      const std::size_t start = ++i;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t digits_start = i;
      long long k = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        k = k * 10 + (text[i] - '0');
        if (k > 1'000'000) throw SyntaxError("exponent too large", digits_start);
        ++i;
      }
      if (i == digits_start) throw SyntaxError("malformed exponent", start);
      if (k < 1) throw SyntaxError("exponent must be a positive integer", digits_start);
      letters.insert(letters.end(), static_cast<std::size_t>(k - 1), last);
      have_letter = false;
      continue;
    }
    throw SyntaxError(std::string("invalid character '") + text[i] + "'", i);
  }
  return Word(rank, letters);
}

// Plain letter string, or with runs of length >= 2 written as x^k.
inline std::string format_letters(std::span<const Generator> letters, bool compact = false) {
  std::string s;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const std::size_t run = j - i;
    if (compact && run >= 2) {
      s += letter_char(letters[i]);
      s += '^';
      s += std::to_string(run);
    } else {
      s.append(run, letter_char(letters[i]));
    }
    i = j;
  }
  return s;
}

inline std::string to_string(const Word& w, bool compact = false) {
  return w.empty() ? std::string("1") : format_letters(w.letters(), compact);
}

inline std::string to_string(const CyclicWord& c, bool compact = false) {
  return c.empty() ? std::string("1") : format_letters(c.letters(), compact);
}

inline Word generator_word(int rank, int index, int sign = 1) {
  return Word(rank, {Generator(index, sign)});
}

}  // namespace freeaut

#endif  // FREEAUT_WORD_HPP
