#pragma once

// Text formats.  Point sets: one "<x> <y>" pair per line, coordinates in any
// of the three rational forms, '#' starts a comment, blank lines ignored.
// Emission always re-validates and writes canonical p/q forms, so files
// round-trip exactly.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "otk/point_set.hpp"

namespace otk {

inline PointSet read_point_set(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string xs, ys, extra;
    if (!(ls >> xs)) continue;  // blank
    if (!(ls >> ys) || (ls >> extra))
      fail(errc::parse_error,
           "point set line " + std::to_string(lineno) +
               ": expected exactly two coordinates");
    pts.push_back({parse_rational(xs), parse_rational(ys)});
  }
  return validate(std::move(pts));
}

inline void write_point_set(std::ostream& out, const PointSet& P,
                            const std::string& comment = "") {
  if (!comment.empty()) out << "# " << comment << "\n";
  for (const Point& p : P)
    out << format_rational(p.x) << " " << format_rational(p.y) << "\n";
}

inline std::string to_string(const PointSet& P) {
  std::ostringstream os;
  write_point_set(os, P);
  return os.str();
}

// Order-type tables as "i j k <+1|-1>" lines over sorted triples (1-based).
inline void write_order_type(std::ostream& out, const OrderTypeTable& T) {
  const std::size_t n = T.size();
  out << n << "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        out << i + 1 << " " << j + 1 << " " << k + 1 << " "
            << (T.at(i, j, k) == Orientation::counterclockwise ? "+1" : "-1")
            << "\n";
}

}  // namespace otk
