#pragma once

#include <functional>
#include <vector>

#include "fcd/word.hpp"

namespace fcd {

// Canonical reduced form of an element of the type D_n Coxeter group:
//
//   w = t(1, i1) t(2, i2) ... t(n-1, i_{n-1}) . t(n, j1) t(n-1, j2) t(n, j3) ...
//
// where t(i, j) is the descending run returned by segment(i, j, n).
// prefix[k-1] stores i_k with 1 <= i_k <= k+1; the value k+1 encodes the
// empty segment.  suffix_params holds the strictly increasing parameters
// j1 < j2 < ... <= n-1 of the alternating tail (the tail segment [n] is
// stored normalised as j = n-1).  Every group element has exactly one such
// form, so there are n! * 2^(n-1) forms in total.
struct CanonicalForm {
  int n = 0;
  std::vector<int> prefix;         // size n-1
  std::vector<int> suffix_params;  // strictly increasing, values in 1..n-1

  bool operator==(const CanonicalForm&) const = default;

  bool is_identity() const;

  // Throws std::invalid_argument if any structural invariant fails.
  void validate() const;
};

// Descending run of generators.  For i <= n-1: [i, i-1, ..., j] when j <= i,
// empty when j > i.  For i == n the run skips n-1 (which does not neighbor
// n): [n, n-2, n-3, ..., j] when j <= n-2, [n] when j is n-1 or n, empty
// when j > n.
Word segment(Letter i, Letter j, int n);

CanonicalForm identity_form(int n);

// Concatenates the segments of the form.  Tolerates a final suffix
// parameter of n (an alternate spelling of the bare [n] segment; split
// normalises it to n-1).
Word realize(const CanonicalForm& form);

// Inverse of realize: greedily parses w back into maximal descending runs,
// prefix segments for k = 1..n-1 first, then the alternating tail.  The
// parse is unambiguous; throws ParseError when w does not realize any form.
CanonicalForm split(const Word& w, int n);

// Streams all n! * 2^(n-1) canonical forms of D_n in a fixed deterministic
// order: lexicographic on (i1, ..., i_{n-1}, suffix_params), where the
// empty segment sorts before i_k = 1 and suffix parameter lists are ordered
// () < (1) < (1,2) < ... (prefix of a chain first, then by value).  The
// identity form comes first.  Throws std::invalid_argument for n < 4.
void enumerate_canonical(int n, const std::function<void(const CanonicalForm&)>& fn);
std::vector<CanonicalForm> enumerate_canonical(int n);

// The comparator realised by the enumeration order above.
bool form_less(const CanonicalForm& a, const CanonicalForm& b);

}  // namespace fcd
