#include "og4/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "og4/error.hpp"

namespace og4 {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw InvalidArgument("permutation degree must be at least 1");
  std::vector<char> seen(images_.size(), 0);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw InvalidArgument("image sequence is not a bijection");
    seen[y] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw InvalidArgument("permutation degree must be at least 1");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(Unchecked{}, std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  if (degree == 0) throw InvalidArgument("permutation degree must be at least 1");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<char> used(degree, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point x = cyc[i];
      if (x >= degree)
        throw InvalidArgument("cycle point " + std::to_string(x + 1) + " exceeds degree " +
                              std::to_string(degree));
      if (used[x]) throw InvalidArgument("point " + std::to_string(x + 1) + " repeated in cycles");
      used[x] = 1;
      img[x] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(Unchecked{}, std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(images_.size(), 0);
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    std::vector<Point> cyc;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      cyc.push_back(y);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, c.size());
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<Point> img(images_.size());
  for (Point x = 0; x < images_.size(); ++x) img[images_[x]] = x;
  return Permutation(Unchecked{}, std::move(img));
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (q.degree() != degree())
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(degree()) +
                         " and " + std::to_string(q.degree()));
  std::vector<Point> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) img[x] = q.images_[images_[x]];
  return Permutation(Unchecked{}, std::move(img));
}

Permutation Permutation::conjugate_by(const Permutation& q) const {
  if (q.degree() != degree()) throw DegreeMismatch("conjugating permutation has wrong degree");
  // q^-1 p q maps q(x) to q(p(x)).
  std::vector<Point> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) img[q.images_[x]] = q.images_[images_[x]];
  return Permutation(Unchecked{}, std::move(img));
}

std::string Permutation::to_cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::string s;
  for (const auto& c : cyc) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }
Permutation inverse(const Permutation& p) { return p.inverse(); }

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  std::size_t max_point = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                               text[i] == '\r' || text[i] == ','))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("malformed cycle notation '" + std::string(text) + "': expected '(' at offset " +
                       std::to_string(i));
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_space();
      if (i >= text.size())
        throw ParseError("malformed cycle notation '" + std::string(text) + "': unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9')
        throw ParseError("malformed cycle notation '" + std::string(text) +
                         "': unexpected character at offset " + std::to_string(i));
      std::size_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 100'000'000) throw ParseError("point out of range in '" + std::string(text) + "'");
        ++i;
      }
      if (v == 0) throw ParseError("points are 1-based; found 0 in '" + std::string(text) + "'");
      max_point = std::max(max_point, v);
      cyc.push_back(static_cast<Point>(v - 1));
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_space();
  }
  if (degree == 0) degree = std::max<std::size_t>(max_point, 1);
  if (max_point > degree)
    throw ParseError("point " + std::to_string(max_point) + " exceeds degree " +
                     std::to_string(degree) + " in '" + std::string(text) + "'");
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed cycle notation '") + std::string(text) + "': " + e.what());
  }
}

}  // namespace og4
