#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finconv/spaces.hpp"

namespace finconv::test {

inline PseudoSpace space(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges = {}) {
  return PseudoSpace::from_edges(std::move(labels), edges);
}

inline PseudoSpace sierpinski() { return space({"0", "1"}, {{"0", "1"}}); }

inline PointSet subset(const PseudoSpace& s, const std::vector<std::string>& labels) {
  return s.points().subset(labels);
}

// Continuity straight from the edge condition, independent of the library predicate.
inline bool edge_preserving(const PseudoSpace& x, const PseudoSpace& y, const std::vector<std::size_t>& f) {
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (x.conv().test(a, b) && !y.conv().test(f[a], f[b])) return false;
    }
  }
  return true;
}

// All functions [n] -> [m] in lexicographic order, by counting in base m.
inline std::vector<std::vector<std::size_t>> functions(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  if (m == 0 && n > 0) total = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> f(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      f[n - 1 - i] = c % m;
      c /= m;
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace finconv::test
