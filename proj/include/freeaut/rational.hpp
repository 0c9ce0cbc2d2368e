#ifndef FREEAUT_RATIONAL_HPP
#define FREEAUT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "freeaut/errors.hpp"

namespace freeaut {

// Exact rational with a positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {  // NOLINT: implicit from integers
    if (den_ == 0) throw PreconditionError("zero denominator");
    normalize();
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Smallest integer >= this.
  std::int64_t ceil() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

  // Accepts "p" or "p/q".
  static Rational parse(const std::string& s) {
    try {
      std::size_t used = 0;
      auto slash = s.find('/');
      std::int64_t p = std::stoll(s.substr(0, slash), &used);
      if (used != (slash == std::string::npos ? s.size() : slash)) throw PreconditionError("");
      if (slash == std::string::npos) return Rational(p);
      std::int64_t q = std::stoll(s.substr(slash + 1), &used);
      if (used != s.size() - slash - 1) throw PreconditionError("");
      return Rational(p, q);
    } catch (const std::exception&) {
      throw PreconditionError("malformed rational '" + s + "'");
    }
  }

  friend Rational operator+(Rational a, Rational b) { return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
  friend Rational operator-(Rational a, Rational b) { return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
  friend Rational operator*(Rational a, Rational b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num_ == 0) throw PreconditionError("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend Rational abs(Rational a) { return Rational(a.num_ < 0 ? -a.num_ : a.num_, a.den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      num_ = -num_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace freeaut

#endif  // FREEAUT_RATIONAL_HPP
