#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bipoints/bidegree.hpp"
#include "bipoints/errors.hpp"
#include "bipoints/geometry.hpp"
#include "bipoints/harness.hpp"

namespace bipoints {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kMonomialIndexContract = "a*(j+1)+c";
inline constexpr const char* kPrngName = "mt19937_64";

// Either explicit points (one `a:b,c:d` line each) or a 0/1 grid block with
// an optional `scheme <name>` header.  `#` lines and blank lines are ignored.
struct InputDocument {
  enum class Kind { points, grid } kind = Kind::points;
  std::vector<std::array<std::int64_t, 4>> points;  // [a:b] x [c:d]
  std::vector<std::string> grid_rows;
  CoordinateScheme scheme = CoordinateScheme::generic;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::int64_t parse_int(const std::string& tok) {
  const std::string t = trim(tok);
  if (t.empty()) throw ParseError("empty integer token");
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + t + "'");
  }
  if (pos != t.size()) throw ParseError("bad integer '" + t + "'");
  return v;
}

inline bool is_grid_row(const std::string& line) {
  bool any = false;
  for (char ch : line) {
    if (ch == '0' || ch == '1') {
      any = true;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return any;
}

}  // namespace detail

inline InputDocument parse_input(const std::string& text) {
  InputDocument doc;
  bool saw_points = false, saw_grid = false;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;

    if (line.rfind("scheme", 0) == 0) {
      std::string rest = detail::trim(line.substr(6));
      if (!rest.empty() && rest[0] == ':') rest = detail::trim(rest.substr(1));
      doc.scheme = scheme_from_name(rest);
      continue;
    }

    if (detail::is_grid_row(line)) {
      saw_grid = true;
      std::string row;
      for (char ch : line)
        if (ch == '0' || ch == '1') row.push_back(ch);
      doc.grid_rows.push_back(std::move(row));
      continue;
    }

    // points line: a:b,c:d
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("expected `a:b,c:d`, got '" + line + "'");
    const std::string lhs = line.substr(0, comma), rhs = line.substr(comma + 1);
    const auto colon1 = lhs.find(':'), colon2 = rhs.find(':');
    if (colon1 == std::string::npos || colon2 == std::string::npos)
      throw ParseError("expected `a:b,c:d`, got '" + line + "'");
    doc.points.push_back({detail::parse_int(lhs.substr(0, colon1)),
                          detail::parse_int(lhs.substr(colon1 + 1)),
                          detail::parse_int(rhs.substr(0, colon2)),
                          detail::parse_int(rhs.substr(colon2 + 1))});
    saw_points = true;
  }

  if (saw_points && saw_grid) throw ParseError("input mixes point lines and grid rows");
  if (!saw_points && !saw_grid) throw ParseError("input contains no points");
  if (saw_grid) {
    doc.kind = InputDocument::Kind::grid;
    for (const auto& row : doc.grid_rows)
      if (row.size() != doc.grid_rows.front().size()) throw ParseError("ragged grid rows");
    bool any = false;
    for (const auto& row : doc.grid_rows) any = any || row.find('1') != std::string::npos;
    if (!any) throw ParseError("grid has no occupied cells");
  }
  return doc;
}

template <class K>
PointSet<K> to_pointset(const InputDocument& doc) {
  if (doc.kind == InputDocument::Kind::points) {
    std::vector<BiPoint<K>> pts;
    for (const auto& [a, b, c, d] : doc.points)
      pts.push_back(make_bipoint(FieldTraits<K>::from_int(a), FieldTraits<K>::from_int(b),
                                 FieldTraits<K>::from_int(c), FieldTraits<K>::from_int(d)));
    return PointSet<K>(std::move(pts));
  }
  IncidenceGrid g(doc.grid_rows.size(), doc.grid_rows.front().size());
  for (std::size_t t = 0; t < g.rows; ++t)
    for (std::size_t u = 0; u < g.cols; ++u)
      if (doc.grid_rows[t][u] == '1') g.set(t, u);
  return grid_pointset<K>(g, doc.scheme);
}

inline std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---- JSON serialization -------------------------------------------------

using nlohmann::json;

template <class K>
json point1_to_json(const Point1<K>& p) {
  return json::array({FieldTraits<K>::to_string(p.a), FieldTraits<K>::to_string(p.b)});
}

template <class K>
json bipoint_to_json(const BiPoint<K>& p) {
  return json::array({point1_to_json(p.first), point1_to_json(p.second)});
}

inline json bidegree_to_json(const Bidegree& d) { return json::array({d.i, d.j}); }

inline json degree_set_to_json(const DegreeSet& ds) {
  json arr = json::array();
  for (const Bidegree& d : ds) arr.push_back(bidegree_to_json(d));
  return arr;
}

template <class K>
json biform_to_json(const BiForm<K>& f) {
  json coeffs = json::array();
  for (const K& c : f.coeffs) coeffs.push_back(FieldTraits<K>::to_string(c));
  return {{"degree", bidegree_to_json(f.degree)},
          {"coefficients", coeffs},
          {"monomial_index", kMonomialIndexContract}};
}

// points-format text for a generated set; parses back to the same PointSet
template <class K>
std::string pointset_to_text(const PointSet<K>& x, const std::string& header_comment = "") {
  std::ostringstream out;
  if (!header_comment.empty()) out << "# " << header_comment << "\n";
  for (const auto& p : x.points())
    out << FieldTraits<K>::to_string(p.first.a) << ":" << FieldTraits<K>::to_string(p.first.b)
        << "," << FieldTraits<K>::to_string(p.second.a) << ":"
        << FieldTraits<K>::to_string(p.second.b) << "\n";
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace bipoints
