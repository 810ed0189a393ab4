#include "fcd/weight_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fcd/errors.hpp"
#include "fcd/homogeneity.hpp"

namespace fcd {

Content::Content(std::map<Letter, int> multiplicities) : mult_(std::move(multiplicities)) {
  for (auto it = mult_.begin(); it != mult_.end();) {
    if (it->second < 0) throw std::invalid_argument("negative multiplicity");
    if (it->first < 1) throw std::invalid_argument("letters must be >= 1");
    if (it->second == 0)
      it = mult_.erase(it);
    else
      height_ += it++->second;
  }
}

Content Content::of_word(const Word& w) {
  std::map<Letter, int> mult;
  for (Letter c : w) ++mult[c];
  return Content(std::move(mult));
}

int Content::count(Letter i) const {
  auto it = mult_.find(i);
  return it == mult_.end() ? 0 : it->second;
}

Word Content::sorted_word() const {
  Word w;
  w.reserve(static_cast<std::size_t>(height_));
  for (auto [letter, count] : mult_) w.insert(w.end(), static_cast<std::size_t>(count), letter);
  return w;
}

std::vector<Word> words_of(const Content& alpha, int height_cap) {
  if (alpha.height() > height_cap)
    throw ResourceLimitError("content height " + std::to_string(alpha.height()) +
                             " exceeds the height cap (" + std::to_string(height_cap) +
                             "); raise the cap to continue");
  Word w = alpha.sorted_word();
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

WeightGraph build_graph(const Content& alpha, const DynkinGraph& g, int height_cap) {
  for (auto [letter, count] : alpha.multiplicities())
    if (!g.contains(letter)) throw std::invalid_argument("content not supported on the diagram");

  WeightGraph wg;
  wg.alpha = alpha;
  wg.vertices = words_of(alpha, height_cap);
  for (std::size_t v = 0; v < wg.vertices.size(); ++v) {
    Word w = wg.vertices[v];
    for (std::size_t r = 0; r + 1 < w.size(); ++r) {
      Letter a = w[r], b = w[r + 1];
      if (a == b || g.neighbors(a, b)) continue;
      std::swap(w[r], w[r + 1]);
      auto it = std::lower_bound(wg.vertices.begin(), wg.vertices.end(), w);
      const auto u = static_cast<std::size_t>(it - wg.vertices.begin());
      if (v < u) wg.edges.emplace_back(static_cast<int>(v), static_cast<int>(u));
      std::swap(w[r], w[r + 1]);
    }
  }
  std::sort(wg.edges.begin(), wg.edges.end());
  wg.edges.erase(std::unique(wg.edges.begin(), wg.edges.end()), wg.edges.end());
  return wg;
}

std::vector<Component> components(const WeightGraph& wg, const DynkinGraph& g) {
  const std::size_t size = wg.vertices.size();
  std::vector<std::size_t> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : wg.edges) {
    std::size_t ra = find(static_cast<std::size_t>(a));
    std::size_t rb = find(static_cast<std::size_t>(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }

  // Vertices are lexicographically sorted, so grouping by root in index
  // order yields components ordered by minimal word, members sorted.
  std::vector<int> slot(size, -1);
  std::vector<Component> out;
  for (std::size_t v = 0; v < size; ++v) {
    std::size_t root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[root])].words.push_back(wg.vertices[v]);
  }
  for (Component& c : out) c.homogeneous = is_homogeneous(c.words.front(), g);
  return out;
}

std::vector<Component> homogeneous_components(const WeightGraph& wg, const DynkinGraph& g,
                                              HomogeneityCheck mode) {
  std::vector<Component> out;
  for (Component& c : components(wg, g)) {
    bool keep = c.homogeneous;
    if (mode == HomogeneityCheck::AllMembers) {
      keep = std::all_of(c.words.begin(), c.words.end(),
                         [&](const Word& w) { return is_homogeneous(w, g); });
    }
    if (keep) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace fcd
