#pragma once

// Permutations of {0, ..., n-1}. Composition applies the right factor first:
// compose(f, g)(x) = f(g(x)). Text I/O uses 1-based disjoint cycle notation.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/error.hpp"

namespace hgs {

using Point = std::uint16_t;

class Perm {
 public:
  Perm() = default;

  /// Identity on n points.
  explicit Perm(std::size_t n) : images_(n) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// From an image array; throws unless it is a bijection.
  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x]) throw Error("Perm: image array is not a bijection");
      seen[x] = true;
    }
  }

  /// From 0-based cycles on n points.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
    Perm f(n);
    std::vector<bool> used(n, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= n || used[c[i]]) throw Error("Perm: cycles are not disjoint or out of range");
        used[c[i]] = true;
        f.images_[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return f;
  }

  /// Parse 1-based cycle notation, e.g. "(1,2,3)(4,5)"; "()" is the identity.
  static Perm parse(std::string_view text, std::size_t n) {
    std::vector<std::vector<Point>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw Error("Perm::parse: expected '(' in \"" + std::string(text) + "\"");
      ++i;
      std::vector<Point> cycle;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw Error("Perm::parse: expected a point in \"" + std::string(text) + "\"");
        const long v = std::stol(std::string(text.substr(i, j - i)));
        if (v < 1 || static_cast<std::size_t>(v) > n) throw Error("Perm::parse: point out of range");
        cycle.push_back(static_cast<Point>(v - 1));
        i = j;
        skip_ws();
        if (i < text.size() && text[i] == ',') ++i;
        skip_ws();
      }
      if (i >= text.size()) throw Error("Perm::parse: unterminated cycle");
      ++i;
      if (cycle.size() > 1) cycles.push_back(std::move(cycle));
      skip_ws();
    }
    return from_cycles(n, cycles);
  }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    Perm g(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) g.images_[images_[i]] = static_cast<Point>(i);
    return g;
  }

  /// f^k for k >= 0.
  Perm pow(long k) const {
    Perm result(images_.size());
    Perm base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  /// Composition, right factor first.
  friend Perm operator*(const Perm& f, const Perm& g) {
    if (f.degree() != g.degree()) throw Error("compose: degree mismatch");
    Perm h;
    h.images_.resize(f.images_.size());
    for (std::size_t i = 0; i < g.images_.size(); ++i) h.images_[i] = f.images_[g.images_[i]];
    return h;
  }

  /// g f g^-1.
  Perm conjugated_by(const Perm& g) const { return g * *this * g.inverse(); }

  std::size_t order() const;
  bool has_fixed_point() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] == i) return true;
    return false;
  }

  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) {
    return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                  b.images_.begin(), b.images_.end());
  }

 private:
  std::vector<Point> images_;
};

inline Perm compose(const Perm& f, const Perm& g) { return f * g; }

struct CycleDecomposition {
  std::vector<std::vector<Point>> cycles;  // each of length >= 2
  std::vector<Point> fixed_points;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

/// Cycles ordered by smallest point; each cycle starts at its smallest point.
inline CycleDecomposition cycle_decompose(const Perm& f) {
  CycleDecomposition out;
  std::vector<bool> seen(f.degree(), false);
  for (std::size_t s = 0; s < f.degree(); ++s) {
    if (seen[s]) continue;
    std::vector<Point> cycle;
    Point x = static_cast<Point>(s);
    while (!seen[x]) {
      seen[x] = true;
      cycle.push_back(x);
      x = f(x);
    }
    if (cycle.size() == 1)
      out.fixed_points.push_back(cycle.front());
    else
      out.cycles.push_back(std::move(cycle));
  }
  return out;
}

inline std::size_t Perm::order() const {
  std::size_t result = 1;
  for (const auto& c : cycle_decompose(*this).cycles) result = std::lcm(result, c.size());
  return result;
}

inline std::string Perm::to_string() const {
  const auto d = cycle_decompose(*this);
  if (d.cycles.empty()) return "()";
  std::string s;
  for (const auto& c : d.cycles) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s;
}

struct PermHash {
  std::size_t operator()(const Perm& f) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : f.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace hgs
