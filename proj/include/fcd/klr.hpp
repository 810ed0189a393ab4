#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fcd/dynkin.hpp"
#include "fcd/weight_graph.hpp"
#include "fcd/word.hpp"

namespace fcd {

// A choice of direction for every edge of a simply laced diagram.
class OrientedQuiver {
public:
  OrientedQuiver(DynkinGraph graph, std::vector<std::pair<Letter, Letter>> arrows);

  // Chain edges point i -> i+1; for TypeD additionally n-2 -> n-1 and
  // n-2 -> n.
  static OrientedQuiver default_orientation(DynkinGraph graph);

  OrientedQuiver reversed() const;

  const DynkinGraph& graph() const noexcept { return graph_; }
  bool arrow(Letter from, Letter to) const;

private:
  DynkinGraph graph_;
  std::vector<std::pair<Letter, Letter>> arrows_;
};

// Square integer matrix over a module basis.  Every generator action and
// every relation side stays within entries {-1, 0, 1}, and an integer
// identity holds over any ground field by scalar extension.
class LinearOp {
public:
  LinearOp() = default;
  explicit LinearOp(std::size_t dim);
  static LinearOp identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  int& at(std::size_t row, std::size_t col);
  int at(std::size_t row, std::size_t col) const;
  bool is_zero() const;

  bool operator==(const LinearOp&) const = default;
  LinearOp operator+(const LinearOp& o) const;
  LinearOp operator-(const LinearOp& o) const;
  LinearOp operator*(const LinearOp& o) const;  // composition: (a*b)v = a(b(v))

private:
  std::size_t dim_ = 0;
  std::vector<int> m_;  // row-major
};

// S(C): one basis vector per word of a homogeneous component C.  e(w)
// projects onto v_w, every y_r acts by zero, and psi_r sends v_w to
// v_{s_r w} when the swapped word stays in C and to zero otherwise.
struct HomogeneousModule {
  Content alpha;
  std::vector<Word> basis;  // sorted lexicographically

  std::size_t dim() const noexcept { return basis.size(); }
  int height() const noexcept { return alpha.height(); }

  // Index of w in the basis, or -1.
  int index_of(const Word& w) const;
};

// Validates that c is a homogeneous component (uniform content, every word
// homogeneous, closed and connected under admissible transpositions);
// throws std::domain_error otherwise.
HomogeneousModule build_module(const Component& c, const OrientedQuiver& q);

// Bypasses validation; exists so tests can watch verify_grading fail on a
// deliberately corrupted component.
HomogeneousModule make_module_unchecked(std::vector<Word> basis);

LinearOp act_e(const HomogeneousModule& m, const Word& w);   // w must have content alpha
LinearOp act_y(const HomogeneousModule& m, int r);           // 1 <= r <= height
LinearOp act_psi(const HomogeneousModule& m, int r);         // 1 <= r <= height-1

struct RelationFailure {
  std::string relation;
  int k = 0;              // generator indices involved (0 when unused)
  int l = 0;
  Word idempotent;        // word argument, empty when the relation has none
};

struct RelationCheck {
  std::string relation;
  std::size_t cases_checked = 0;
  std::vector<RelationFailure> failures;
};

struct RelationReport {
  std::vector<RelationCheck> relations;

  bool all_pass() const;
  std::size_t total_cases() const;
};

enum class IdempotentCoverage { Sampled, Full };

// Evaluates both sides of each defining relation of the algebra as
// LinearOps: idempotent orthogonality and completeness, commutation of y
// and psi with e(w), y-y and distant psi-psi commutation, the mixed y-psi
// straightening pair, the psi-square case split, and the braid deviation.
// Word arguments run over the basis plus the first 100 words of the
// ambient content class outside it (all of them under Full coverage).
// Orientation-dependent cases use q's arrows.  Discrepancies become report
// entries, never exceptions.
RelationReport verify_relations(const HomogeneousModule& m, const OrientedQuiver& q,
                                IdempotentCoverage coverage = IdempotentCoverage::Sampled);

struct GradingFailure {
  Word word;
  int position = 0;  // swap position whose degree is nonzero
  int degree = 0;
};

struct GradingReport {
  std::size_t swaps_checked = 0;
  std::vector<GradingFailure> failures;
  int module_degree = 0;  // convention: degree 0

  bool all_pass() const { return failures.empty(); }
};

// deg(psi_r e(w)) is -2 on an equal pair, +1 on a neighbor pair and 0
// otherwise; on a homogeneous component every admissible swap must land in
// the 0 case, so the module sits in a single degree (fixed at 0).
GradingReport verify_grading(const HomogeneousModule& m, const OrientedQuiver& q);

// ch_q S(C) = sum of q^0 * w over basis words w: every weight space is
// one-dimensional and the module is concentrated in one degree.
struct QCharacter {
  std::vector<Word> words;
  int degree = 0;

  std::size_t total_dimension() const noexcept { return words.size(); }
  std::string to_string() const;
};

QCharacter q_character(const HomogeneousModule& m);

}  // namespace fcd
