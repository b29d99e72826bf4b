#pragma once

#include <algorithm>
#include <compare>
#include <vector>

namespace bipoints {

// Element of N^2 under the product order.
struct Bidegree {
  int i = 0;
  int j = 0;

  // product order: componentwise >=
  bool dominates(const Bidegree& o) const { return i >= o.i && j >= o.j; }

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  // lexicographic, used only for deterministic ordering of output
  friend auto operator<=>(const Bidegree& a, const Bidegree& b) {
    if (auto c = a.i <=> b.i; c != 0) return c;
    return a.j <=> b.j;
  }
};

// Antichain of bidegrees, sorted lexicographically.
using DegreeSet = std::vector<Bidegree>;

inline DegreeSet minimal_elements(std::vector<Bidegree> degs) {
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  DegreeSet out;
  for (const Bidegree& d : degs) {
    bool dominated = false;
    for (const Bidegree& e : degs)
      if (e != d && d.dominates(e)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(d);
  }
  return out;
}

}  // namespace bipoints
