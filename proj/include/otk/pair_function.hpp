#pragma once

// A total function on ordered pairs of distinct indices into {0,..,k-1}.
// On disk: header "n k", then one line "i j v" per ordered pair with i, j
// and v all 1-based (values live in {1..k} in the file, 0-based in memory).

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "otk/error.hpp"

namespace otk {

class PairFunction {
 public:
  PairFunction() : n_(0), k_(0) {}
  PairFunction(std::size_t n, std::size_t k)
      : n_(n), k_(k), vals_(n * n, 0) {
    if (k == 0) fail(errc::invalid_argument, "pair function: k = 0");
  }

  std::size_t size() const { return n_; }
  std::size_t range() const { return k_; }

  std::size_t value(std::size_t i, std::size_t j) const {
    check_pair(i, j);
    return vals_[i * n_ + j];
  }
  void set_value(std::size_t i, std::size_t j, std::size_t v) {
    check_pair(i, j);
    if (v >= k_)
      fail(errc::invalid_argument, "pair function: value out of range");
    vals_[i * n_ + j] = v;
  }

  friend bool operator==(const PairFunction&, const PairFunction&) = default;

 private:
  void check_pair(std::size_t i, std::size_t j) const {
    if (i == j || i >= n_ || j >= n_)
      fail(errc::invalid_argument, "pair function: bad ordered pair",
           {i + 1, j + 1});
  }
  std::size_t n_, k_;
  std::vector<std::size_t> vals_;
};

inline void write_pair_function(std::ostream& out, const PairFunction& f) {
  out << f.size() << " " << f.range() << "\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (i != j)
        out << i + 1 << " " << j + 1 << " " << f.value(i, j) + 1 << "\n";
}

inline PairFunction read_pair_function(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    fail(errc::parse_error, "pair function: missing header");
  std::istringstream hs(line);
  std::size_t n = 0, k = 0;
  if (!(hs >> n >> k) || k == 0)
    fail(errc::parse_error, "pair function: bad header");

  PairFunction f(n, k);
  std::vector<bool> seen(n * n, false);
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::size_t i = 0, j = 0, v = 0;
    if (!(ls >> i)) continue;
    if (!(ls >> j >> v))
      fail(errc::parse_error, "pair function: malformed value line");
    if (i < 1 || j < 1 || i > n || j > n || i == j || v < 1 || v > k)
      fail(errc::parse_error, "pair function: entry out of range", {i, j});
    f.set_value(i - 1, j - 1, v - 1);
    seen[(i - 1) * n + (j - 1)] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !seen[i * n + j])
        fail(errc::parse_error, "pair function: missing ordered pair",
             {i + 1, j + 1});
  return f;
}

}  // namespace otk
