#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fcd/word.hpp"

namespace fcd {

enum class DiagramKind { TypeA, TypeD, Custom };

// Simply laced Coxeter diagram on vertices 1..rank.  Two generators
// commute iff they are not adjacent here.
//
// Type A_n:  1 - 2 - ... - n
// Type D_n:  1 - 2 - ... - (n-2) with both n-1 and n attached to n-2.
class DynkinGraph {
public:
  static DynkinGraph type_a(int rank);
  static DynkinGraph type_d(int rank);  // rank >= 4
  static DynkinGraph custom(int rank, const std::vector<std::pair<Letter, Letter>>& edges);

  int rank() const noexcept { return rank_; }
  DiagramKind kind() const noexcept { return kind_; }

  bool contains(Letter i) const noexcept { return i >= 1 && i <= rank_; }

  // Irreflexive and symmetric; throws std::invalid_argument if a vertex is
  // out of range.
  bool neighbors(Letter i, Letter j) const;

  // Sorted list of edges {i, j} with i < j.
  std::vector<std::pair<Letter, Letter>> edges() const;

private:
  DynkinGraph(int rank, DiagramKind kind);
  void add_edge(Letter i, Letter j);

  int rank_;
  DiagramKind kind_;
  std::vector<std::uint64_t> adj_;  // adjacency bitmask per vertex
};

}  // namespace fcd
