#pragma once

#include <cstddef>
#include <vector>

#include "fcd/dynkin.hpp"
#include "fcd/word.hpp"

namespace fcd {

inline constexpr std::size_t kDefaultClassCap = 1'000'000;

// A word is homogeneous when between any two occurrences of the same letter
// c there are at least two positions (counted with multiplicity) holding
// neighbors of c.  Checking consecutive occurrences of each letter suffices,
// and the property is inherited by prefixes, which is what makes pruned
// enumeration sound.
bool is_homogeneous(const Word& w, const DynkinGraph& g);

// All words reachable from w by swapping adjacent commuting letters
// (neither equal nor neighbors), in lexicographic order.  Throws
// ResourceLimitError once more than `cap` words have been generated.
std::vector<Word> commutation_class(const Word& w, const DynkinGraph& g,
                                    std::size_t cap = kDefaultClassCap);

// Reduced w is fully commutative iff no word in its commutation class
// contains a factor c d c with c, d neighbors.  For simply laced diagrams
// this is equivalent to is_homogeneous, which the tests cross-check.
bool is_fully_commutative(const Word& w, const DynkinGraph& g,
                          std::size_t cap = kDefaultClassCap);

}  // namespace fcd
