#pragma once

#include <map>
#include <vector>

#include "fcd/dynkin.hpp"
#include "fcd/word.hpp"

namespace fcd {

inline constexpr int kDefaultHeightCap = 12;

// Multiset of letters of a word: how many times each generator occurs.
// Identified with the weight sum(c_i * alpha_i).
class Content {
public:
  Content() = default;
  explicit Content(std::map<Letter, int> multiplicities);
  static Content of_word(const Word& w);

  int height() const noexcept { return height_; }
  const std::map<Letter, int>& multiplicities() const noexcept { return mult_; }
  int count(Letter i) const;

  // The letters in weakly increasing order, e.g. {1,2,2,3}.
  Word sorted_word() const;

  bool operator==(const Content&) const = default;
  auto operator<=>(const Content&) const = default;

private:
  std::map<Letter, int> mult_;
  int height_ = 0;
};

// All arrangements of the multiset, lexicographically.  Throws
// ResourceLimitError when height() exceeds height_cap (the vertex count is
// a multinomial coefficient, so this guards the factorial blow-up).
std::vector<Word> words_of(const Content& alpha, int height_cap = kDefaultHeightCap);

// Vertices: words_of(alpha).  Edges: unordered pairs of words differing by
// one swap of adjacent letters that neither coincide nor neighbor each
// other in g; stored as index pairs (a, b) with a < b, sorted.
struct WeightGraph {
  Content alpha;
  std::vector<Word> vertices;
  std::vector<std::pair<int, int>> edges;
};

WeightGraph build_graph(const Content& alpha, const DynkinGraph& g,
                        int height_cap = kDefaultHeightCap);

struct Component {
  std::vector<Word> words;  // lexicographically sorted
  bool homogeneous = false;
};

// Connected components of the weight graph, ordered by minimal word.  The
// homogeneity flag is computed from one representative, which is valid
// because homogeneity is a class invariant (the tests check all members
// agree).
std::vector<Component> components(const WeightGraph& wg, const DynkinGraph& g);

enum class HomogeneityCheck { Representative, AllMembers };

std::vector<Component> homogeneous_components(
    const WeightGraph& wg, const DynkinGraph& g,
    HomogeneityCheck mode = HomogeneityCheck::Representative);

}  // namespace fcd
