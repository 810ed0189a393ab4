#include "fcd/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fcd/errors.hpp"

namespace fcd {

namespace {

void check_rank(int n) {
  if (n < 4) throw std::invalid_argument("rank must be >= 4, got " + std::to_string(n));
}

// Sort key under which the empty segment (i_k = k+1) precedes every
// nonempty choice.
int prefix_key(int i_k, int k) { return i_k == k + 1 ? 0 : i_k; }

}  // namespace

bool CanonicalForm::is_identity() const {
  if (!suffix_params.empty()) return false;
  for (int k = 1; k <= static_cast<int>(prefix.size()); ++k)
    if (prefix[k - 1] != k + 1) return false;
  return true;
}

void CanonicalForm::validate() const {
  check_rank(n);
  if (static_cast<int>(prefix.size()) != n - 1)
    throw std::invalid_argument("prefix must have " + std::to_string(n - 1) + " entries");
  for (int k = 1; k <= n - 1; ++k)
    if (prefix[k - 1] < 1 || prefix[k - 1] > k + 1)
      throw std::invalid_argument("prefix entry i_" + std::to_string(k) + " = " +
                                  std::to_string(prefix[k - 1]) + " outside 1.." +
                                  std::to_string(k + 1));
  int prev = 0;
  for (int j : suffix_params) {
    if (j <= prev || j > n - 1)
      throw std::invalid_argument("suffix parameters must increase strictly within 1.." +
                                  std::to_string(n - 1));
    prev = j;
  }
}

Word segment(Letter i, Letter j, int n) {
  if (i < 1 || i > n)
    throw std::invalid_argument("segment: i = " + std::to_string(i) + " outside 1.." +
                                std::to_string(n));
  if (j < 1) throw std::invalid_argument("segment: j must be >= 1");
  Word w;
  if (i <= n - 1) {
    for (Letter c = i; c >= j; --c) w.push_back(c);
  } else if (j <= n) {
    w.push_back(n);
    for (Letter c = n - 2; c >= j; --c) w.push_back(c);
  }
  return w;
}

CanonicalForm identity_form(int n) {
  check_rank(n);
  CanonicalForm cf;
  cf.n = n;
  cf.prefix.resize(n - 1);
  for (int k = 1; k <= n - 1; ++k) cf.prefix[k - 1] = k + 1;
  return cf;
}

Word realize(const CanonicalForm& form) {
  // Validate leniently: the last suffix parameter may be n, the alternate
  // spelling of the bare [n] segment.
  CanonicalForm normalised = form;
  if (!normalised.suffix_params.empty() && normalised.suffix_params.back() == form.n)
    normalised.suffix_params.back() = form.n - 1;
  normalised.validate();

  const int n = form.n;
  Word w;
  for (int k = 1; k <= n - 1; ++k) {
    Word seg = segment(k, form.prefix[k - 1], n);
    w.insert(w.end(), seg.begin(), seg.end());
  }
  for (std::size_t a = 0; a < form.suffix_params.size(); ++a) {
    Letter head = (a % 2 == 0) ? n : n - 1;
    Word seg = segment(head, form.suffix_params[a], n);
    w.insert(w.end(), seg.begin(), seg.end());
  }
  return w;
}

CanonicalForm split(const Word& w, int n) {
  check_rank(n);
  for (std::size_t p = 0; p < w.size(); ++p)
    if (w[p] < 1 || w[p] > n)
      throw ParseError(p, "letter " + std::to_string(w[p]) + " outside 1.." + std::to_string(n));

  CanonicalForm cf;
  cf.n = n;
  cf.prefix.resize(n - 1);
  std::size_t pos = 0;

  // Prefix segments in order k = 1..n-1, each a maximal descending run
  // starting at its own k.  Maximality cannot steal from a later segment:
  // a run continues on j-1 <= k-1 while every later head is at least k+1.
  for (int k = 1; k <= n - 1; ++k) {
    if (pos < w.size() && w[pos] == k) {
      int j = k;
      ++pos;
      while (pos < w.size() && w[pos] == j - 1) {
        --j;
        ++pos;
      }
      cf.prefix[k - 1] = j;
    } else {
      cf.prefix[k - 1] = k + 1;
    }
  }

  // Alternating tail: heads n, n-1, n, ...  A bare [n] (no n-2 following)
  // is the j = n-1 segment.
  int prev = 0;
  for (std::size_t a = 0; pos < w.size(); ++a) {
    Letter head = (a % 2 == 0) ? n : n - 1;
    if (w[pos] != head)
      throw ParseError(pos, "expected tail segment head " + std::to_string(head));
    int j;
    std::size_t head_pos = pos;
    ++pos;
    if (head == n) {
      j = n - 1;
      if (pos < w.size() && w[pos] == n - 2) {
        j = n - 2;
        ++pos;
        while (pos < w.size() && w[pos] == j - 1) {
          --j;
          ++pos;
        }
      }
    } else {
      j = n - 1;
      while (pos < w.size() && w[pos] == j - 1) {
        --j;
        ++pos;
      }
    }
    if (j <= prev)
      throw ParseError(head_pos, "suffix parameters must increase strictly");
    cf.suffix_params.push_back(j);
    prev = j;
  }
  return cf;
}

bool form_less(const CanonicalForm& a, const CanonicalForm& b) {
  const int levels = static_cast<int>(std::min(a.prefix.size(), b.prefix.size()));
  for (int k = 1; k <= levels; ++k) {
    int ka = prefix_key(a.prefix[k - 1], k);
    int kb = prefix_key(b.prefix[k - 1], k);
    if (ka != kb) return ka < kb;
  }
  if (a.prefix.size() != b.prefix.size()) return a.prefix.size() < b.prefix.size();
  return a.suffix_params < b.suffix_params;  // () < (1) < (1,2) < ...
}

void enumerate_canonical(int n, const std::function<void(const CanonicalForm&)>& fn) {
  check_rank(n);
  CanonicalForm cf = identity_form(n);

  // Suffix parameter lists in subset-lexicographic order, emitted below
  // every complete prefix.
  auto emit_suffixes = [&](auto&& self, int min_j) -> void {
    fn(cf);
    for (int j = min_j; j <= n - 1; ++j) {
      cf.suffix_params.push_back(j);
      self(self, j + 1);
      cf.suffix_params.pop_back();
    }
  };

  auto descend = [&](auto&& self, int k) -> void {
    if (k == n) {
      emit_suffixes(emit_suffixes, 1);
      return;
    }
    cf.prefix[k - 1] = k + 1;  // empty segment first
    self(self, k + 1);
    for (int i = 1; i <= k; ++i) {
      cf.prefix[k - 1] = i;
      self(self, k + 1);
    }
    cf.prefix[k - 1] = k + 1;
  };
  descend(descend, 1);
}

std::vector<CanonicalForm> enumerate_canonical(int n) {
  std::vector<CanonicalForm> out;
  enumerate_canonical(n, [&](const CanonicalForm& cf) { out.push_back(cf); });
  return out;
}

}  // namespace fcd
