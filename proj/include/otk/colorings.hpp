#pragma once

// Colorings used by the arrow verifiers: colors on points, on unordered
// pairs, and on sorted p-tuples.  Colors are 0-based in memory and 1-based
// in the text forms ("n k" header, then "i c" / "i j c" lines).

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "otk/error.hpp"

namespace otk {

struct PointColoring {
  std::size_t n = 0, k = 1;
  std::vector<std::uint8_t> color;  // per point

  std::uint8_t at(std::size_t i) const { return color[i]; }
};

class PairColoring {
 public:
  PairColoring() = default;
  PairColoring(std::size_t n, std::size_t k)
      : n_(n), k_(k), color_(n < 2 ? 0 : n * (n - 1) / 2, 0) {}

  std::size_t size() const { return n_; }
  std::size_t colors() const { return k_; }
  std::size_t pair_count() const { return color_.size(); }

  // Rank of {i<j} in lexicographic pair order.
  std::size_t rank(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }
  std::uint8_t at(std::size_t i, std::size_t j) const {
    return color_[rank(i, j)];
  }
  void set(std::size_t i, std::size_t j, std::uint8_t c) {
    color_[rank(i, j)] = c;
  }
  std::uint8_t& flat(std::size_t r) { return color_[r]; }
  std::uint8_t flat(std::size_t r) const { return color_[r]; }

 private:
  std::size_t n_ = 0, k_ = 1;
  std::vector<std::uint8_t> color_;
};

// Colors on sorted p-tuples, stored sparsely by tuple.
struct TupleColoring {
  std::size_t n = 0, p = 3, k = 2;
  std::map<std::vector<std::size_t>, std::uint8_t> color;

  std::uint8_t at(const std::vector<std::size_t>& tuple) const {
    auto it = color.find(tuple);
    if (it == color.end())
      fail(errc::invalid_argument, "tuple coloring: unknown tuple");
    return it->second;
  }
};

inline void write_pair_coloring(std::ostream& out, const PairColoring& c) {
  out << c.size() << " " << c.colors() << "\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      out << i + 1 << " " << j + 1 << " " << static_cast<int>(c.at(i, j)) + 1
          << "\n";
}

inline PairColoring read_pair_coloring(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    fail(errc::parse_error, "pair coloring: missing header");
  std::istringstream hs(line);
  std::size_t n = 0, k = 0;
  if (!(hs >> n >> k) || k == 0)
    fail(errc::parse_error, "pair coloring: bad header");
  PairColoring c(n, k);
  std::vector<bool> seen(c.pair_count(), false);
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::size_t i = 0, j = 0, col = 0;
    if (!(ls >> i)) continue;
    if (!(ls >> j >> col) || i < 1 || j < 1 || i > n || j > n || i == j ||
        col < 1 || col > k)
      fail(errc::parse_error, "pair coloring: malformed line");
    c.set(i - 1, j - 1, static_cast<std::uint8_t>(col - 1));
    seen[c.rank(i - 1, j - 1)] = true;
  }
  for (bool s : seen)
    if (!s) fail(errc::parse_error, "pair coloring: missing pair");
  return c;
}

inline void write_point_coloring(std::ostream& out, const PointColoring& c) {
  out << c.n << " " << c.k << "\n";
  for (std::size_t i = 0; i < c.n; ++i)
    out << i + 1 << " " << static_cast<int>(c.color[i]) + 1 << "\n";
}

inline void write_tuple_coloring(std::ostream& out, const TupleColoring& c) {
  out << c.n << " " << c.k << " " << c.p << "\n";
  for (const auto& [tuple, col] : c.color) {
    for (std::size_t v : tuple) out << v + 1 << " ";
    out << static_cast<int>(col) + 1 << "\n";
  }
}

}  // namespace otk
