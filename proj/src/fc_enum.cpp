#include "fcd/fc_enum.hpp"

#include <array>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fcd/dynkin.hpp"
#include "fcd/homogeneity.hpp"

namespace fcd {

namespace {

// Incremental homogeneity tracking for a growing word.  push() reports
// whether the word is still homogeneous after appending: a letter closing
// a consecutive equal pair needs two neighbor letters strictly in between,
// and since later letters cannot add witnesses inside an already closed
// pair, a failed push condemns the entire subtree (exact pruning).
class SegmentSearch {
public:
  explicit SegmentSearch(const DynkinGraph& g)
      : g_(g), last_(static_cast<std::size_t>(g.rank()) + 1, -1) {}

  bool push(Letter c) {
    const int p = static_cast<int>(word_.size());
    const int r = last_[static_cast<std::size_t>(c)];
    bool ok = true;
    if (r >= 0) {
      int found = 0;
      for (int t = r + 1; t < p && found < 2; ++t)
        if (g_.neighbors(c, word_[static_cast<std::size_t>(t)])) ++found;
      ok = found >= 2;
    }
    word_.push_back(c);
    undo_.push_back(r);
    last_[static_cast<std::size_t>(c)] = p;
    return ok;
  }

  // Pushes the whole run; true iff every push kept the word homogeneous.
  bool push_run(const Word& run) {
    bool ok = true;
    for (Letter c : run) ok = push(c) && ok;
    return ok;
  }

  void pop_run(std::size_t count) {
    while (count--) {
      last_[static_cast<std::size_t>(word_.back())] = undo_.back();
      undo_.pop_back();
      word_.pop_back();
    }
  }

  const Word& word() const noexcept { return word_; }

private:
  const DynkinGraph& g_;
  Word word_;
  std::vector<int> last_;
  std::vector<int> undo_;
};

template <typename Emit>
void suffix_dfs(int n, SegmentSearch& st, CanonicalForm& cf, int min_j, Emit& emit) {
  emit(cf, st.word());
  const Letter head = (cf.suffix_params.size() % 2 == 0) ? n : n - 1;
  for (int j = min_j; j <= n - 1; ++j) {
    const Word run = segment(head, j, n);
    const bool ok = st.push_run(run);
    if (ok) {
      cf.suffix_params.push_back(j);
      suffix_dfs(n, st, cf, j + 1, emit);
      cf.suffix_params.pop_back();
    }
    st.pop_run(run.size());
  }
}

template <typename Emit>
void prefix_dfs(int n, SegmentSearch& st, CanonicalForm& cf, int k, Emit& emit) {
  if (k == n) {
    suffix_dfs(n, st, cf, 1, emit);
    return;
  }
  cf.prefix[static_cast<std::size_t>(k - 1)] = k + 1;  // empty segment first
  prefix_dfs(n, st, cf, k + 1, emit);
  for (int i = 1; i <= k; ++i) {
    const Word run = segment(k, i, n);
    const bool ok = st.push_run(run);
    if (ok) {
      cf.prefix[static_cast<std::size_t>(k - 1)] = i;
      prefix_dfs(n, st, cf, k + 1, emit);
    }
    st.pop_run(run.size());
  }
  cf.prefix[static_cast<std::size_t>(k - 1)] = k + 1;
}

// The search forest is partitioned at depth 3 for parallel runs: one root
// per choice of (i1, i2, i3), listed in enumeration order (empty segment
// before i = 1..k).
constexpr int kRootDepth = 3;

std::vector<std::array<int, kRootDepth>> partition_roots() {
  std::vector<std::array<int, kRootDepth>> roots;
  std::array<int, kRootDepth> pick{};
  auto level = [&](auto&& self, int k) -> void {
    if (k > kRootDepth) {
      roots.push_back(pick);
      return;
    }
    pick[static_cast<std::size_t>(k - 1)] = k + 1;
    self(self, k + 1);
    for (int i = 1; i <= k; ++i) {
      pick[static_cast<std::size_t>(k - 1)] = i;
      self(self, k + 1);
    }
  };
  level(level, 1);
  return roots;
}

// Runs emit over the pruned subtree below one root; returns without
// emitting when the root word itself is already non-homogeneous.
template <typename Emit>
void run_root(int n, const DynkinGraph& g, const std::array<int, kRootDepth>& root, Emit& emit) {
  SegmentSearch st(g);
  CanonicalForm cf = identity_form(n);
  bool ok = true;
  for (int k = 1; k <= kRootDepth; ++k) {
    const int i = root[static_cast<std::size_t>(k - 1)];
    cf.prefix[static_cast<std::size_t>(k - 1)] = i;
    if (i <= k) ok = st.push_run(segment(k, i, n)) && ok;
  }
  if (ok) prefix_dfs(n, st, cf, kRootDepth + 1, emit);
}

void check_rank_d(int n) {
  if (n < 4) throw std::invalid_argument("rank must be >= 4, got " + std::to_string(n));
}

}  // namespace

std::vector<LabeledWord> fc_words_reference(int n) {
  check_rank_d(n);
  const DynkinGraph g = DynkinGraph::type_d(n);
  std::vector<LabeledWord> out;
  enumerate_canonical(n, [&](const CanonicalForm& cf) {
    Word w = realize(cf);
    if (is_homogeneous(w, g)) out.push_back({cf, std::move(w)});
  });
  return out;
}

std::vector<LabeledWord> fc_words_serial(int n) {
  check_rank_d(n);
  const DynkinGraph g = DynkinGraph::type_d(n);
  std::vector<LabeledWord> out;
  SegmentSearch st(g);
  CanonicalForm cf = identity_form(n);
  auto emit = [&](const CanonicalForm& form, const Word& w) { out.push_back({form, w}); };
  prefix_dfs(n, st, cf, 1, emit);
  return out;
}

std::vector<LabeledWord> fc_words(int n, int jobs) {
  check_rank_d(n);
  const DynkinGraph g = DynkinGraph::type_d(n);
  const auto roots = partition_roots();
  std::vector<std::vector<LabeledWord>> buckets(roots.size());

#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::size_t ri = 0; ri < roots.size(); ++ri) {
    auto emit = [&buckets, ri](const CanonicalForm& form, const Word& w) {
      buckets[ri].push_back({form, w});
    };
    run_root(n, g, roots[ri], emit);
  }

  std::vector<LabeledWord> out;
  for (auto& bucket : buckets) {
    out.insert(out.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  }
  return out;
}

std::uint64_t fc_count(int n, int jobs) {
  check_rank_d(n);
  const DynkinGraph g = DynkinGraph::type_d(n);
  const auto roots = partition_roots();
  std::uint64_t total = 0;

#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) reduction(+ : total)
#endif
  for (std::size_t ri = 0; ri < roots.size(); ++ri) {
    std::uint64_t local = 0;
    auto emit = [&local](const CanonicalForm&, const Word&) { ++local; };
    run_root(n, g, roots[ri], emit);
    total += local;
  }
  return total;
}

std::vector<LabeledWord> fc_words_with_suffix(int n, const std::vector<int>& params) {
  check_rank_d(n);
  const DynkinGraph g = DynkinGraph::type_d(n);

  std::vector<Word> runs;
  for (std::size_t a = 0; a < params.size(); ++a)
    runs.push_back(segment((a % 2 == 0) ? n : n - 1, params[a], n));

  std::vector<LabeledWord> out;
  SegmentSearch st(g);
  CanonicalForm cf = identity_form(n);
  cf.suffix_params = params;
  cf.validate();

  auto at_leaf = [&](const CanonicalForm& form, const Word&) {
    std::size_t pushed = 0;
    bool ok = true;
    for (const Word& run : runs) {
      ok = st.push_run(run) && ok;
      pushed += run.size();
    }
    if (ok) out.push_back({form, st.word()});
    st.pop_run(pushed);
  };

  // Reuse the prefix search; cut the tail recursion off by entering the
  // leaf callback directly at k == n.
  auto level = [&](auto&& self, int k) -> void {
    if (k == n) {
      at_leaf(cf, st.word());
      return;
    }
    cf.prefix[static_cast<std::size_t>(k - 1)] = k + 1;
    self(self, k + 1);
    for (int i = 1; i <= k; ++i) {
      const Word run = segment(k, i, n);
      const bool ok = st.push_run(run);
      if (ok) {
        cf.prefix[static_cast<std::size_t>(k - 1)] = i;
        self(self, k + 1);
      }
      st.pop_run(run.size());
    }
    cf.prefix[static_cast<std::size_t>(k - 1)] = k + 1;
  };
  level(level, 1);
  return out;
}

std::vector<Word> fc_words_type_a(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  const DynkinGraph g = DynkinGraph::type_a(rank);
  std::vector<Word> out;
  SegmentSearch st(g);

  // Same prefix search as type D, with no alternating tail: the canonical
  // form of A_rank is t(1, i1) ... t(rank, i_rank).
  auto level = [&](auto&& self, int k) -> void {
    if (k > rank) {
      out.push_back(st.word());
      return;
    }
    self(self, k + 1);  // empty segment
    for (int i = 1; i <= k; ++i) {
      Word run;
      for (Letter c = k; c >= i; --c) run.push_back(c);
      const bool ok = st.push_run(run);
      if (ok) self(self, k + 1);
      st.pop_run(run.size());
    }
  };
  level(level, 1);
  return out;
}

}  // namespace fcd
