#include "fcd/klr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fcd/homogeneity.hpp"

namespace fcd {

OrientedQuiver::OrientedQuiver(DynkinGraph graph, std::vector<std::pair<Letter, Letter>> arrows)
    : graph_(std::move(graph)), arrows_(std::move(arrows)) {
  std::set<std::pair<Letter, Letter>> undirected;
  for (auto [from, to] : arrows_) {
    if (!graph_.neighbors(from, to)) throw std::invalid_argument("arrow along a non-edge");
    if (!undirected.insert({std::min(from, to), std::max(from, to)}).second)
      throw std::invalid_argument("edge oriented twice");
  }
  if (undirected.size() != graph_.edges().size())
    throw std::invalid_argument("every edge needs exactly one direction");
}

OrientedQuiver OrientedQuiver::default_orientation(DynkinGraph graph) {
  std::vector<std::pair<Letter, Letter>> arrows = graph.edges();  // (i, j) with i < j
  return OrientedQuiver(std::move(graph), std::move(arrows));
}

OrientedQuiver OrientedQuiver::reversed() const {
  std::vector<std::pair<Letter, Letter>> flipped;
  flipped.reserve(arrows_.size());
  for (auto [from, to] : arrows_) flipped.emplace_back(to, from);
  return OrientedQuiver(graph_, std::move(flipped));
}

bool OrientedQuiver::arrow(Letter from, Letter to) const {
  return std::find(arrows_.begin(), arrows_.end(), std::make_pair(from, to)) != arrows_.end();
}

LinearOp::LinearOp(std::size_t dim) : dim_(dim), m_(dim * dim, 0) {}

LinearOp LinearOp::identity(std::size_t dim) {
  LinearOp op(dim);
  for (std::size_t i = 0; i < dim; ++i) op.m_[i * dim + i] = 1;
  return op;
}

int& LinearOp::at(std::size_t row, std::size_t col) { return m_[row * dim_ + col]; }
int LinearOp::at(std::size_t row, std::size_t col) const { return m_[row * dim_ + col]; }

bool LinearOp::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](int v) { return v == 0; });
}

LinearOp LinearOp::operator+(const LinearOp& o) const {
  LinearOp out(dim_);
  for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] = m_[i] + o.m_[i];
  return out;
}

LinearOp LinearOp::operator-(const LinearOp& o) const {
  LinearOp out(dim_);
  for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] = m_[i] - o.m_[i];
  return out;
}

LinearOp LinearOp::operator*(const LinearOp& o) const {
  LinearOp out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const int a = m_[i * dim_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) out.m_[i * dim_ + j] += a * o.m_[k * dim_ + j];
    }
  }
  return out;
}

int HomogeneousModule::index_of(const Word& w) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it == basis.end() || *it != w) return -1;
  return static_cast<int>(it - basis.begin());
}

HomogeneousModule build_module(const Component& c, const OrientedQuiver& q) {
  if (c.words.empty()) throw std::domain_error("empty component");
  const DynkinGraph& g = q.graph();

  const Content alpha = Content::of_word(c.words.front());
  for (const Word& w : c.words) {
    if (Content::of_word(w) != alpha) throw std::domain_error("component mixes contents");
    if (!is_homogeneous(w, g)) throw std::domain_error("component contains a non-homogeneous word");
  }

  HomogeneousModule m;
  m.alpha = alpha;
  m.basis = c.words;
  std::sort(m.basis.begin(), m.basis.end());

  // Closure and connectivity under admissible transpositions: the basis
  // must be exactly one commutation class.
  const std::vector<Word> reachable = commutation_class(m.basis.front(), g);
  if (reachable != m.basis)
    throw std::domain_error("component is not a single connected class");
  return m;
}

HomogeneousModule make_module_unchecked(std::vector<Word> basis) {
  HomogeneousModule m;
  m.alpha = Content::of_word(basis.front());
  m.basis = std::move(basis);
  std::sort(m.basis.begin(), m.basis.end());
  return m;
}

LinearOp act_e(const HomogeneousModule& m, const Word& w) {
  if (Content::of_word(w) != m.alpha) throw std::domain_error("act_e: wrong content");
  LinearOp op(m.dim());
  const int idx = m.index_of(w);
  if (idx >= 0) op.at(static_cast<std::size_t>(idx), static_cast<std::size_t>(idx)) = 1;
  return op;
}

LinearOp act_y(const HomogeneousModule& m, int r) {
  if (r < 1 || r > m.height()) throw std::invalid_argument("act_y: position out of range");
  return LinearOp(m.dim());
}

LinearOp act_psi(const HomogeneousModule& m, int r) {
  if (r < 1 || r >= m.height()) throw std::invalid_argument("act_psi: position out of range");
  LinearOp op(m.dim());
  for (std::size_t col = 0; col < m.dim(); ++col) {
    Word w = m.basis[col];
    std::swap(w[static_cast<std::size_t>(r - 1)], w[static_cast<std::size_t>(r)]);
    const int row = m.index_of(w);
    if (row >= 0) op.at(static_cast<std::size_t>(row), col) = 1;
  }
  return op;
}

bool RelationReport::all_pass() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const RelationCheck& r) { return r.failures.empty(); });
}

std::size_t RelationReport::total_cases() const {
  std::size_t total = 0;
  for (const RelationCheck& r : relations) total += r.cases_checked;
  return total;
}

namespace {

// Words the idempotent arguments range over: the whole basis, then words
// of the same content outside it -- the first 100 lexicographically, or
// all of them under Full coverage.
std::vector<Word> idempotent_words(const HomogeneousModule& m, IdempotentCoverage coverage) {
  std::vector<Word> out = m.basis;
  std::size_t outside_budget =
      coverage == IdempotentCoverage::Full ? static_cast<std::size_t>(-1) : 100;
  Word w = m.alpha.sorted_word();
  do {
    if (outside_budget == 0) break;
    if (m.index_of(w) < 0) {
      out.push_back(w);
      --outside_budget;
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

RelationReport verify_relations(const HomogeneousModule& m, const OrientedQuiver& q,
                                IdempotentCoverage coverage) {
  const int d = m.height();
  const std::vector<Word> words = idempotent_words(m, coverage);
  const LinearOp id = LinearOp::identity(m.dim());
  const LinearOp zero(m.dim());

  std::vector<LinearOp> e;
  e.reserve(words.size());
  for (const Word& w : words) e.push_back(act_e(m, w));
  std::vector<LinearOp> psi, y;
  for (int r = 1; r < d; ++r) psi.push_back(act_psi(m, r));
  for (int r = 1; r <= d; ++r) y.push_back(act_y(m, r));

  RelationReport report;
  auto check = [&report](const std::string& name) -> RelationCheck& {
    report.relations.push_back({name, 0, {}});
    return report.relations.back();
  };
  auto record = [](RelationCheck& rc, bool pass, int k, int l, const Word& w) {
    ++rc.cases_checked;
    if (!pass) rc.failures.push_back({rc.relation, k, l, w});
  };

  {  // e(w) e(v) = delta_{wv} e(w)
    RelationCheck& rc = check("idempotent orthogonality");
    for (std::size_t a = 0; a < words.size(); ++a)
      for (std::size_t b = 0; b < words.size(); ++b) {
        const LinearOp lhs = e[a] * e[b];
        const LinearOp& rhs = a == b ? e[a] : zero;
        record(rc, lhs == rhs, static_cast<int>(a), static_cast<int>(b), words[a]);
      }
  }
  {  // sum of e(w) over the content class = 1; off-basis words act as zero
    RelationCheck& rc = check("idempotent completeness");
    LinearOp sum(m.dim());
    for (std::size_t a = 0; a < m.dim(); ++a) sum = sum + e[a];  // basis words come first
    record(rc, sum == id, 0, 0, {});
    for (std::size_t a = m.dim(); a < words.size(); ++a)
      record(rc, e[a].is_zero(), static_cast<int>(a), 0, words[a]);
  }
  {  // y_k e(w) = e(w) y_k
    RelationCheck& rc = check("y commutes with idempotents");
    for (int k = 1; k <= d; ++k)
      for (std::size_t a = 0; a < words.size(); ++a)
        record(rc, y[static_cast<std::size_t>(k - 1)] * e[a] == e[a] * y[static_cast<std::size_t>(k - 1)],
               k, 0, words[a]);
  }
  {  // psi_k e(w) = e(s_k w) psi_k
    RelationCheck& rc = check("psi intertwines idempotents");
    for (int k = 1; k < d; ++k)
      for (std::size_t a = 0; a < words.size(); ++a) {
        Word swapped = words[a];
        std::swap(swapped[static_cast<std::size_t>(k - 1)], swapped[static_cast<std::size_t>(k)]);
        const LinearOp lhs = psi[static_cast<std::size_t>(k - 1)] * e[a];
        const LinearOp rhs = act_e(m, swapped) * psi[static_cast<std::size_t>(k - 1)];
        record(rc, lhs == rhs, k, 0, words[a]);
      }
  }
  {  // y_k y_l = y_l y_k
    RelationCheck& rc = check("y pairwise commutes");
    for (int k = 1; k <= d; ++k)
      for (int l = k + 1; l <= d; ++l)
        record(rc,
               y[static_cast<std::size_t>(k - 1)] * y[static_cast<std::size_t>(l - 1)] ==
                   y[static_cast<std::size_t>(l - 1)] * y[static_cast<std::size_t>(k - 1)],
               k, l, {});
  }
  {  // y_k psi_l = psi_l y_k for k != l, l+1
    RelationCheck& rc = check("y commutes with distant psi");
    for (int l = 1; l < d; ++l)
      for (int k = 1; k <= d; ++k) {
        if (k == l || k == l + 1) continue;
        record(rc,
               y[static_cast<std::size_t>(k - 1)] * psi[static_cast<std::size_t>(l - 1)] ==
                   psi[static_cast<std::size_t>(l - 1)] * y[static_cast<std::size_t>(k - 1)],
               k, l, {});
      }
  }
  {  // (y_{k+1} psi_k - psi_k y_k) e(w) = [w_k = w_{k+1}] e(w), and the
     // mirrored form (psi_k y_{k+1} - y_k psi_k) e(w)
    RelationCheck& rc = check("y psi straightening");
    for (int k = 1; k < d; ++k)
      for (std::size_t a = 0; a < words.size(); ++a) {
        const bool equal_pair = words[a][static_cast<std::size_t>(k - 1)] == words[a][static_cast<std::size_t>(k)];
        const LinearOp& rhs = equal_pair ? e[a] : zero;
        const LinearOp& pk = psi[static_cast<std::size_t>(k - 1)];
        const LinearOp& yk = y[static_cast<std::size_t>(k - 1)];
        const LinearOp& yk1 = y[static_cast<std::size_t>(k)];
        const bool first = (yk1 * pk - pk * yk) * e[a] == rhs;
        const bool second = (pk * yk1 - yk * pk) * e[a] == rhs;
        record(rc, first && second, k, 0, words[a]);
      }
  }
  {  // psi_k^2 e(w): 0 on an equal pair, e(w) on a non-neighbor pair, and
     // +/-(y - y) e(w) by arrow direction on a neighbor pair
    RelationCheck& rc = check("psi square");
    for (int k = 1; k < d; ++k) {
      const LinearOp psi_sq =
          psi[static_cast<std::size_t>(k - 1)] * psi[static_cast<std::size_t>(k - 1)];
      for (std::size_t a = 0; a < words.size(); ++a) {
        const Letter wk = words[a][static_cast<std::size_t>(k - 1)];
        const Letter wk1 = words[a][static_cast<std::size_t>(k)];
        const LinearOp& yk = y[static_cast<std::size_t>(k - 1)];
        const LinearOp& yk1 = y[static_cast<std::size_t>(k)];
        LinearOp rhs(m.dim());
        if (wk == wk1) {
          ;  // zero
        } else if (q.arrow(wk, wk1)) {
          rhs = (yk - yk1) * e[a];
        } else if (q.arrow(wk1, wk)) {
          rhs = (yk1 - yk) * e[a];
        } else {
          rhs = e[a];
        }
        record(rc, psi_sq * e[a] == rhs, k, 0, words[a]);
      }
    }
  }
  {  // psi_k psi_l = psi_l psi_k for |k - l| > 1
    RelationCheck& rc = check("distant psi commute");
    for (int k = 1; k < d; ++k)
      for (int l = k + 2; l < d; ++l)
        record(rc,
               psi[static_cast<std::size_t>(k - 1)] * psi[static_cast<std::size_t>(l - 1)] ==
                   psi[static_cast<std::size_t>(l - 1)] * psi[static_cast<std::size_t>(k - 1)],
               k, l, {});
  }
  {  // (psi_{k+1} psi_k psi_{k+1} - psi_k psi_{k+1} psi_k) e(w) is zero
     // unless w_{k+2} = w_k neighbors w_{k+1}, when it is +/- e(w)
    RelationCheck& rc = check("braid deviation");
    for (int k = 1; k + 1 < d; ++k) {
      const LinearOp& pk = psi[static_cast<std::size_t>(k - 1)];
      const LinearOp& pk1 = psi[static_cast<std::size_t>(k)];
      const LinearOp braid = pk1 * pk * pk1 - pk * pk1 * pk;
      for (std::size_t a = 0; a < words.size(); ++a) {
        const Letter wk = words[a][static_cast<std::size_t>(k - 1)];
        const Letter wk1 = words[a][static_cast<std::size_t>(k)];
        const Letter wk2 = words[a][static_cast<std::size_t>(k + 1)];
        LinearOp rhs(m.dim());
        if (wk2 == wk && q.arrow(wk, wk1))
          rhs = e[a];
        else if (wk2 == wk && q.arrow(wk1, wk))
          rhs = zero - e[a];
        record(rc, braid * e[a] == rhs, k, 0, words[a]);
      }
    }
  }
  return report;
}

GradingReport verify_grading(const HomogeneousModule& m, const OrientedQuiver& q) {
  const DynkinGraph& g = q.graph();
  GradingReport report;
  for (const Word& w : m.basis) {
    for (int r = 1; r < static_cast<int>(w.size()); ++r) {
      Word swapped = w;
      std::swap(swapped[static_cast<std::size_t>(r - 1)], swapped[static_cast<std::size_t>(r)]);
      if (m.index_of(swapped) < 0) continue;  // psi_r kills v_w; no degree constraint
      ++report.swaps_checked;
      const Letter a = w[static_cast<std::size_t>(r - 1)];
      const Letter b = w[static_cast<std::size_t>(r)];
      int degree = 0;
      if (a == b)
        degree = -2;
      else if (g.neighbors(a, b))
        degree = 1;
      if (degree != 0) report.failures.push_back({w, r, degree});
    }
  }
  return report;
}

QCharacter q_character(const HomogeneousModule& m) {
  QCharacter ch;
  ch.words = m.basis;
  ch.degree = 0;
  return ch;
}

std::string QCharacter::to_string() const {
  if (words.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += " + ";
    out += format_word(words[i]);
  }
  return out;
}

}  // namespace fcd
