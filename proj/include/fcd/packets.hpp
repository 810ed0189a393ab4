#pragma once

#include <cstddef>
#include <vector>

#include "fcd/catalan.hpp"
#include "fcd/dynkin.hpp"
#include "fcd/word.hpp"

namespace fcd {

// The alternating tail t(n, j1) t(n-1, j2) t(n, j3) ... of a canonical
// form, identified by its strictly increasing parameter list.
struct Suffix {
  int n = 0;
  std::vector<int> params;  // strictly increasing, values in 1..n-1

  bool operator==(const Suffix&) const = default;

  Word word() const;
  void validate() const;  // throws std::invalid_argument
};

// All 2^(n-1) suffixes of rank n: parameter lists in the enumeration order
// of canonical forms (() < (1) < (1,2) < ...).
std::vector<Suffix> all_suffixes(int n);

// Packet index of a suffix: n when the parameter list is empty, j1 for a
// single parameter, j1 - 1 otherwise.  This closed rule reproduces the
// five-case definition (tested case by case).
int packet_index(const Suffix& s);

// All homogeneous canonical words of D_n sharing a suffix, sorted
// lexicographically; prefixes[i] is the prefix part of words[i].
struct Collection {
  Suffix suffix;
  std::vector<Word> words;
  std::vector<Word> prefixes;

  std::size_t size() const noexcept { return words.size(); }
};

struct Packet {
  int n = 0;
  int k = 0;
  std::vector<Collection> collections;  // ordered by suffix parameter list

  std::size_t size() const noexcept { return collections.size(); }
};

// g must be the TypeD graph of rank s.n.
Collection build_collection(const Suffix& s, const DynkinGraph& g);

// All collections whose suffix has packet_index == k.  Throws
// std::invalid_argument unless n >= 4 and 0 <= k <= n.
Packet build_packet(int n, int k);

// Every packet of rank n, indexed k = 0..n.
std::vector<Packet> decompose(int n);

// |P(n,k)| in closed form: 2^(n-2) - 1 for k = 0, 2^(n-k-2) for
// 1 <= k <= n-2, and 1 for k in {n-1, n}.
BigInt packet_size_formula(int n, int k);

// The four collection bijections.  Inputs must be homogeneous canonical
// words lying in the stated source collection; std::domain_error otherwise.
//
//   sigma: c^n_(k)        -> c^n_(k+1, n-1)   for 1 <= k <= n-3
//   tau:   c^n_(k+1, n-1) -> c^n_(k)          (inverse of sigma)
//   phi:   c^n_(k, n-1)  u  c^(n-1)_(k) -> c^n_(k)  for 1 <= k <= n-2
//   rho:   c^n_(k) -> one of phi's two domains (inverse of phi)
//
// sigma trades the suffix t(n,k) for t(n,k+1) t(n-1,n-1), converting a
// trailing ascending run [m, m+1, ..., n-1] of the prefix (minimal m >= k)
// into the descending segment [m, m-1, ..., k]; tau undoes this.  phi on
// the first domain drops the final suffix letter n-1; on the second it
// reads a D_(n-1) word, appends the prefix segment [n-1] and the suffix
// t(n,k).  The two domains and the two images are disjoint as letter
// sequences (a word is in phi's second domain exactly when it parses in
// rank n-1 with suffix parameters (k); rho picks its branch by whether the
// prefix ends with the letter n-1), so phi and rho take the bare word.
Word sigma(const Word& w, int n, int k);
Word tau(const Word& w, int n, int k);
Word phi(const Word& w, int n, int k);
Word rho(const Word& w, int n, int k);

// One line of verify_theorem: the collection of `suffix` inside packet k
// was expected to have C(n,k) = `expected` words and has `actual`.
struct CollectionCheck {
  int k = 0;
  Suffix suffix;
  std::size_t actual = 0;
  BigInt expected;
  bool pass = false;
};

struct TheoremReport {
  int n = 0;
  std::vector<CollectionCheck> checks;  // ordered by (k, suffix params)

  bool all_pass() const;
};

// Asserts |c| = C(n,k) for every collection c in every packet P(n,k).
// Failures become report entries, never exceptions.
TheoremReport verify_theorem(int n);

struct IdentityReport {
  int n = 0;
  BigInt lhs;           // sum over k of C(n,k) * |P(n,k)|
  BigInt rhs;           // (n+3)/2 * Catalan(n) - 1
  BigInt direct_count;  // homogeneous canonical words, counted outright
  bool pass = false;
};

// Evaluates the packet-size identity exactly and cross-checks the closed
// form against direct enumeration.
IdentityReport verify_identity(int n, int jobs = 0);

}  // namespace fcd
