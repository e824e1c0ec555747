#pragma once

// Binary predicate tables: a total function on ordered pairs of distinct
// indices into a finite, ordered label codomain.  Values are stored as
// positions into the codomain list; the list order is also the order used
// wherever labels must be compared (graph orientation, class naming).
//
// File form:
//   n k <label_1> ... <label_k>
//   i j <label>          (one line per ordered pair, lexicographic, 1-based)

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "otk/error.hpp"

namespace otk {

class PredicateTable {
 public:
  PredicateTable() : n_(0) {}
  PredicateTable(std::size_t n, std::vector<std::string> codomain)
      : n_(n), labels_(std::move(codomain)), vals_(n * n, 0) {
    if (labels_.empty())
      fail(errc::invalid_argument, "predicate table: empty codomain");
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = i + 1; j < labels_.size(); ++j)
        if (labels_[i] == labels_[j])
          fail(errc::invalid_argument, "predicate table: duplicate label '" +
                                           labels_[i] + "'");
  }

  std::size_t size() const { return n_; }
  std::size_t codomain_size() const { return labels_.size(); }
  const std::vector<std::string>& codomain() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_[v]; }

  // Values are codomain positions (0-based); pairs are 0-based and distinct.
  std::size_t value(std::size_t u, std::size_t v) const {
    check_pair(u, v);
    return vals_[u * n_ + v];
  }
  void set_value(std::size_t u, std::size_t v, std::size_t val) {
    check_pair(u, v);
    if (val >= labels_.size())
      fail(errc::invalid_argument, "predicate table: value out of codomain");
    vals_[u * n_ + v] = val;
  }

  friend bool operator==(const PredicateTable&, const PredicateTable&) = default;

 private:
  void check_pair(std::size_t u, std::size_t v) const {
    if (u == v || u >= n_ || v >= n_)
      fail(errc::invalid_argument, "predicate table: bad ordered pair",
           {u + 1, v + 1});
  }
  std::size_t n_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> vals_;
};

inline void write_predicate_table(std::ostream& out, const PredicateTable& T) {
  out << T.size() << " " << T.codomain_size();
  for (std::size_t v = 0; v < T.codomain_size(); ++v) out << " " << T.label(v);
  out << "\n";
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T.size(); ++j)
      if (i != j)
        out << i + 1 << " " << j + 1 << " " << T.label(T.value(i, j)) << "\n";
}

inline PredicateTable read_predicate_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    fail(errc::parse_error, "predicate table: missing header");
  std::istringstream hs(line);
  std::size_t n = 0, k = 0;
  if (!(hs >> n >> k) || k == 0)
    fail(errc::parse_error, "predicate table: bad header");
  std::vector<std::string> labels(k);
  for (auto& l : labels)
    if (!(hs >> l)) fail(errc::parse_error, "predicate table: missing labels");

  PredicateTable T(n, labels);
  std::vector<bool> seen(n * n, false);
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::size_t i = 0, j = 0;
    std::string lab;
    if (!(ls >> i)) continue;
    if (!(ls >> j >> lab))
      fail(errc::parse_error, "predicate table: malformed value line");
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      fail(errc::parse_error, "predicate table: bad pair indices", {i, j});
    auto it = std::find(labels.begin(), labels.end(), lab);
    if (it == labels.end())
      fail(errc::parse_error, "predicate table: unknown label '" + lab + "'");
    T.set_value(i - 1, j - 1,
                static_cast<std::size_t>(it - labels.begin()));
    seen[(i - 1) * n + (j - 1)] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !seen[i * n + j])
        fail(errc::parse_error, "predicate table: missing ordered pair",
             {i + 1, j + 1});
  return T;
}

}  // namespace otk
