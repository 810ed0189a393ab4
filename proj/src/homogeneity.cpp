#include "fcd/homogeneity.hpp"

#include <algorithm>
#include <set>

#include "fcd/errors.hpp"

namespace fcd {

bool is_homogeneous(const Word& w, const DynkinGraph& g) {
  for (Letter c : w)
    if (!g.contains(c)) throw std::invalid_argument("letter outside the diagram");
  const int d = static_cast<int>(w.size());
  std::vector<int> last(static_cast<std::size_t>(g.rank()) + 1, -1);
  for (int s = 0; s < d; ++s) {
    Letter c = w[static_cast<std::size_t>(s)];
    int r = last[static_cast<std::size_t>(c)];
    if (r >= 0) {
      // Two neighbor letters must occur strictly between positions r and s.
      // Consecutive occurrences suffice: any farther pair r' < s' contains
      // a consecutive pair between them, whose witnesses also sit inside
      // (r', s').
      int found = 0;
      for (int t = r + 1; t < s && found < 2; ++t)
        if (g.neighbors(c, w[static_cast<std::size_t>(t)])) ++found;
      if (found < 2) return false;
    }
    last[static_cast<std::size_t>(c)] = s;
  }
  return true;
}

std::vector<Word> commutation_class(const Word& w, const DynkinGraph& g, std::size_t cap) {
  for (Letter c : w)
    if (!g.contains(c)) throw std::invalid_argument("letter outside the diagram");

  std::set<Word> seen{w};
  std::vector<Word> queue{w};
  while (!queue.empty()) {
    Word cur = queue.back();
    queue.pop_back();
    for (std::size_t r = 0; r + 1 < cur.size(); ++r) {
      Letter a = cur[r], b = cur[r + 1];
      if (a == b || g.neighbors(a, b)) continue;
      std::swap(cur[r], cur[r + 1]);
      if (seen.insert(cur).second) {
        if (seen.size() > cap)
          throw ResourceLimitError("commutation class exceeds cap (" + std::to_string(cap) +
                                   " words); raise the class cap to continue");
        queue.push_back(cur);
      }
      std::swap(cur[r], cur[r + 1]);
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_fully_commutative(const Word& w, const DynkinGraph& g, std::size_t cap) {
  for (const Word& v : commutation_class(w, g, cap))
    for (std::size_t r = 0; r + 2 < v.size(); ++r)
      if (v[r] == v[r + 2] && g.neighbors(v[r], v[r + 1])) return false;
  return true;
}

}  // namespace fcd
