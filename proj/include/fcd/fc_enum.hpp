#pragma once

#include <cstdint>
#include <vector>

#include "fcd/canonical.hpp"
#include "fcd/word.hpp"

namespace fcd {

struct LabeledWord {
  CanonicalForm form;
  Word word;

  bool operator==(const LabeledWord&) const = default;
};

// Fully commutative elements of D_n as canonical reduced words, in the
// order of enumerate_canonical.  Expected count: (n+3)/2 * Catalan(n) - 1.
//
// Three interchangeable implementations:
//  - fc_words_reference: enumerate every form and filter.  No pruning; kept
//    as the ground truth the fast paths are tested against.
//  - fc_words_serial: depth-first over segments, cutting a branch as soon
//    as the partial word stops being homogeneous (prefix-closedness of the
//    condition makes this exact).
//  - fc_words: same search split over the 24 choices of the first three
//    prefix segments and run with OpenMP.  jobs = 0 means library default;
//    output order does not depend on the thread count.
std::vector<LabeledWord> fc_words_reference(int n);
std::vector<LabeledWord> fc_words_serial(int n);
std::vector<LabeledWord> fc_words(int n, int jobs = 0);

std::uint64_t fc_count(int n, int jobs = 0);

// The homogeneous canonical words whose suffix parameters equal `params`
// exactly, in enumeration order.  Searches prefixes only, so a single
// collection costs far less than a full enumeration.
std::vector<LabeledWord> fc_words_with_suffix(int n, const std::vector<int>& params);

// Fully commutative elements of A_rank via the prefix-only canonical form
// t(1, i1) ... t(rank, i_rank).  Expected count: Catalan(rank + 1).
std::vector<Word> fc_words_type_a(int rank);

}  // namespace fcd
