#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "prstar/errors.hpp"

namespace prstar {

/// A bijection of {1..n}, stored as a 0-based image table.
/// Composition is left-to-right: (x * y) applies x first, then y.
class Permutation {
 public:
  explicit Permutation(int degree) : images_(degree) {
    if (degree < 1) throw Error("Permutation: degree must be positive");
    std::iota(images_.begin(), images_.end(), 0);
  }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw Error("Permutation: degree must be positive");
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
        throw Error("Permutation: image table is not a bijection");
      seen[v] = 1;
    }
  }

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of a 0-based point.
  int operator[](int point) const { return images_[point]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  friend Permutation operator*(const Permutation& x, const Permutation& y) {
    if (x.degree() != y.degree())
      throw DegreeMismatch("compose: degrees " + std::to_string(x.degree()) +
                           " vs " + std::to_string(y.degree()));
    std::vector<int> img(x.degree());
    for (int i = 0; i < x.degree(); ++i) img[i] = y.images_[x.images_[i]];
    Permutation r(1);
    r.images_ = std::move(img);
    return r;
  }

  Permutation inverse() const {
    std::vector<int> img(degree());
    for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
    Permutation r(1);
    r.images_ = std::move(img);
    return r;
  }

  /// g^-1 * this * g
  Permutation conjugated_by(const Permutation& g) const {
    return g.inverse() * (*this) * g;
  }

  /// this^-1 * y^-1 * this * y
  friend Permutation commutator(const Permutation& x, const Permutation& y) {
    return x.inverse() * y.inverse() * x * y;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  /// Lexicographic on the image table; the tie-break order used everywhere
  /// determinism matters.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

  friend bool commutes(const Permutation& x, const Permutation& y) {
    for (int i = 0; i < x.degree(); ++i)
      if (y.images_[x.images_[i]] != x.images_[y.images_[i]]) return false;
    return true;
  }

  /// Order = lcm of cycle lengths.
  std::uint64_t order() const {
    std::uint64_t ord = 1;
    std::vector<char> seen(degree(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (int j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  int cycle_count() const {
    int c = 0;
    std::vector<char> seen(degree(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      ++c;
      for (int j = i; !seen[j]; j = images_[j]) seen[j] = 1;
    }
    return c;
  }

  const std::vector<int>& images() const { return images_; }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : images_) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::vector<int> images_;
};

/// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
/// Omitted points are fixed; the empty string is the identity.
inline Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 1) throw BadCycleNotation("degree must be positive");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw BadCycleNotation("expected '(' at position " + std::to_string(i) +
                             " in \"" + text + "\"");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw BadCycleNotation("expected point at position " + std::to_string(i) +
                               " in \"" + text + "\"");
      int p = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        p = p * 10 + (text[i] - '0');
        ++i;
      }
      if (p < 1 || p > degree)
        throw BadCycleNotation("point " + std::to_string(p) + " out of range 1.." +
                               std::to_string(degree));
      if (used[p - 1])
        throw BadCycleNotation("point " + std::to_string(p) + " repeated");
      used[p - 1] = 1;
      cycle.push_back(p - 1);
      skip_ws();
    }
    if (i >= text.size()) throw BadCycleNotation("unterminated cycle in \"" + text + "\"");
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

/// Inverse of parse_cycles; identity prints as "()".
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) {
      seen[i] = 1;
      continue;
    }
    out += '(';
    bool first = true;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace prstar
