#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace og4 {

using Point = std::uint32_t;

// A bijection of {0..n-1}, stored as its image sequence. Products act on the
// right: (p * q)(x) = q(p(x)), so x^(pq) = (x^p)^q.
class Permutation {
 public:
  // Validates that `images` is a bijection of {0..n-1}, n >= 1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Cycles are 0-based; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  std::size_t order() const;
  std::vector<std::vector<Point>> cycles() const;  // nontrivial cycles, least point first

  Permutation inverse() const;
  Permutation operator*(const Permutation& q) const;  // this, then q
  // q^-1 * this * q
  Permutation conjugate_by(const Permutation& q) const;

  // 1-based cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// Parses 1-based cycle notation such as "(1 2 3)(4 5)" or "(1,5,4,3,2)".
// Whitespace and commas separate points; "()" or "" is the identity. With
// degree == 0 the degree is the largest point mentioned (at least 1).
Permutation parse_cycles(std::string_view text, std::size_t degree = 0);

}  // namespace og4
