#include "fcd/dynkin.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fcd {

namespace {
constexpr int kMaxRank = 63;  // adjacency rows are single 64-bit masks

void check_rank(int rank, int min_rank, const char* what) {
  if (rank < min_rank || rank > kMaxRank)
    throw std::invalid_argument(std::string(what) + ": rank " + std::to_string(rank) +
                                " outside " + std::to_string(min_rank) + ".." +
                                std::to_string(kMaxRank));
}
}  // namespace

DynkinGraph::DynkinGraph(int rank, DiagramKind kind)
    : rank_(rank), kind_(kind), adj_(static_cast<std::size_t>(rank) + 1, 0) {}

void DynkinGraph::add_edge(Letter i, Letter j) {
  adj_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  adj_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
}

DynkinGraph DynkinGraph::type_a(int rank) {
  check_rank(rank, 1, "type_a");
  DynkinGraph g(rank, DiagramKind::TypeA);
  for (Letter i = 1; i < rank; ++i) g.add_edge(i, i + 1);
  return g;
}

DynkinGraph DynkinGraph::type_d(int rank) {
  check_rank(rank, 4, "type_d");
  DynkinGraph g(rank, DiagramKind::TypeD);
  for (Letter i = 1; i < rank - 1; ++i) g.add_edge(i, i + 1);
  g.add_edge(rank - 2, rank);
  return g;
}

DynkinGraph DynkinGraph::custom(int rank, const std::vector<std::pair<Letter, Letter>>& edges) {
  check_rank(rank, 1, "custom");
  DynkinGraph g(rank, DiagramKind::Custom);
  for (auto [i, j] : edges) {
    if (!g.contains(i) || !g.contains(j) || i == j)
      throw std::invalid_argument("custom: bad edge {" + std::to_string(i) + "," +
                                  std::to_string(j) + "}");
    g.add_edge(i, j);
  }
  return g;
}

bool DynkinGraph::neighbors(Letter i, Letter j) const {
  if (!contains(i) || !contains(j))
    throw std::invalid_argument("neighbors: vertex outside 1.." + std::to_string(rank_));
  return (adj_[static_cast<std::size_t>(i)] >> j) & 1;
}

std::vector<std::pair<Letter, Letter>> DynkinGraph::edges() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (Letter i = 1; i <= rank_; ++i)
    for (Letter j = i + 1; j <= rank_; ++j)
      if ((adj_[static_cast<std::size_t>(i)] >> j) & 1) out.emplace_back(i, j);
  return out;
}

}  // namespace fcd
