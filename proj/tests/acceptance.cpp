// Acceptance runner: exercises the eleven frozen end-to-end results and
// prints one PASS/FAIL line per criterion.  Exit code 0 iff all pass.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fcd/catalan.hpp"
#include "fcd/dynkin.hpp"
#include "fcd/fc_enum.hpp"
#include "fcd/klr.hpp"
#include "fcd/packets.hpp"
#include "fcd/weight_graph.hpp"
#include "fcd/word.hpp"
#include "goldens.hpp"

namespace {

using fcd::Word;
using Clock = std::chrono::steady_clock;

struct Check {
  bool pass = true;
  std::string note;  // first failure only

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

Check counts_type_d() {
  Check c;
  const std::uint64_t expected[] = {48, 167, 593, 2144, 7864};
  for (int n = 4; n <= 8; ++n) {
    const std::uint64_t got = fcd::fc_count(n);
    c.expect(got == expected[n - 4],
             "n=" + std::to_string(n) + ": counted " + std::to_string(got) +
                 ", expected " + std::to_string(expected[n - 4]));
  }
  return c;
}

Check counts_type_a() {
  Check c;
  const std::size_t expected[] = {5, 14, 42};
  for (int rank = 2; rank <= 4; ++rank) {
    const auto g = fcd::DynkinGraph::type_a(rank);
    std::set<fcd::Content> contents;
    for (const Word& w : fcd::fc_words_type_a(rank))
      contents.insert(fcd::Content::of_word(w));
    std::size_t total = 0;
    for (const auto& alpha : contents)
      total += fcd::homogeneous_components(fcd::build_graph(alpha, g), g).size();
    c.expect(total == expected[rank - 2],
             "rank " + std::to_string(rank) + ": " + std::to_string(total) +
                 " homogeneous components, expected " +
                 std::to_string(expected[rank - 2]));
  }
  return c;
}

Check collection_sizes() {
  Check c;
  for (int n = 4; n <= 8; ++n) {
    const auto report = fcd::verify_theorem(n);
    c.expect(report.checks.size() == (1u << (n - 1)),
             "n=" + std::to_string(n) + ": expected " +
                 std::to_string(1u << (n - 1)) + " collection checks");
    for (const auto& chk : report.checks)
      c.expect(chk.pass, "n=" + std::to_string(n) + ", suffix " +
                             fcd::format_word(chk.suffix.params) + ": " +
                             std::to_string(chk.actual) + " words, expected " +
                             chk.expected.str());
  }
  return c;
}

Check rank4_decomposition() {
  Check c;
  const auto packets = fcd::decompose(4);
  c.expect(packets.size() == 5, "expected packets k = 0..4");
  std::size_t collections = 0;
  for (const auto& p : packets) collections += p.collections.size();
  c.expect(collections == 8, "expected 8 collections in total");

  for (const auto& want : golden::d4_collections()) {
    bool found = false;
    for (const auto& p : packets)
      for (const auto& col : p.collections) {
        if (col.suffix.params != want.suffix) continue;
        found = true;
        c.expect(p.k == want.k, "suffix " + fcd::format_word(want.suffix) +
                                    " landed in packet " + std::to_string(p.k) +
                                    ", expected " + std::to_string(want.k));
        c.expect(col.words == want.words,
                 "word list differs for suffix " + fcd::format_word(want.suffix));
      }
    c.expect(found, "no collection with suffix " + fcd::format_word(want.suffix));
  }
  return c;
}

Check sigma_tau() {
  Check c;
  for (const auto& [from, to] : golden::sigma_rows()) {
    c.expect(fcd::sigma(from, 5, 2) == to, "sigma(" + fcd::format_word(from) + ")");
    c.expect(fcd::tau(to, 5, 2) == from, "tau(" + fcd::format_word(to) + ")");
  }
  for (const auto& [from, to] : golden::tau_rows()) {
    c.expect(fcd::tau(from, 5, 2) == to, "tau(" + fcd::format_word(from) + ")");
    c.expect(fcd::sigma(to, 5, 2) == from, "sigma(" + fcd::format_word(to) + ")");
  }
  for (int n = 4; n <= 7; ++n) {
    const auto g = fcd::DynkinGraph::type_d(n);
    for (int k = 1; k <= n - 3; ++k) {
      const std::string where = " at n=" + std::to_string(n) + ", k=" + std::to_string(k);
      const auto from = fcd::build_collection(fcd::Suffix{n, {k}}, g);
      const auto to = fcd::build_collection(fcd::Suffix{n, {k + 1, n - 1}}, g);
      c.expect(from.size() == to.size(), "collection sizes differ" + where);
      std::set<Word> image;
      for (const Word& w : from.words) {
        const Word v = fcd::sigma(w, n, k);
        image.insert(v);
        c.expect(fcd::tau(v, n, k) == w, "tau(sigma(w)) != w" + where);
      }
      c.expect(image == std::set<Word>(to.words.begin(), to.words.end()),
               "sigma is not onto" + where);
      for (const Word& v : to.words)
        c.expect(fcd::sigma(fcd::tau(v, n, k), n, k) == v, "sigma(tau(v)) != v" + where);
    }
  }
  return c;
}

Check phi_rho() {
  Check c;
  for (const auto& [from, to] : golden::phi_first_branch()) {
    c.expect(fcd::phi(from, 5, 2) == to, "phi(" + fcd::format_word(from) + ")");
    c.expect(fcd::rho(to, 5, 2) == from, "rho(" + fcd::format_word(to) + ")");
  }
  for (const auto& [from, to] : golden::phi_second_branch()) {
    c.expect(fcd::phi(from, 5, 2) == to, "phi(" + fcd::format_word(from) + ")");
    c.expect(fcd::rho(to, 5, 2) == from, "rho(" + fcd::format_word(to) + ")");
  }
  c.expect(golden::phi_first_branch().size() == 5, "first domain should list 5 words");
  c.expect(golden::phi_second_branch().size() == 9, "second domain should list 9 words");

  for (int n = 5; n <= 7; ++n) {
    const auto g = fcd::DynkinGraph::type_d(n);
    const auto g1 = fcd::DynkinGraph::type_d(n - 1);
    for (int k = 1; k <= n - 2; ++k) {
      const std::string where = " at n=" + std::to_string(n) + ", k=" + std::to_string(k);
      const auto dom1 = fcd::build_collection(fcd::Suffix{n, {k, n - 1}}, g);
      const auto dom2 = fcd::build_collection(fcd::Suffix{n - 1, {k}}, g1);
      const auto codom = fcd::build_collection(fcd::Suffix{n, {k}}, g);
      c.expect(dom1.size() + dom2.size() == codom.size(), "size additivity fails" + where);
      std::set<Word> image;
      for (const auto* dom : {&dom1, &dom2})
        for (const Word& w : dom->words) {
          const Word v = fcd::phi(w, n, k);
          image.insert(v);
          c.expect(fcd::rho(v, n, k) == w, "rho(phi(w)) != w" + where);
        }
      c.expect(image == std::set<Word>(codom.words.begin(), codom.words.end()),
               "phi is not onto" + where);
    }
  }
  return c;
}

Check summation_identity() {
  Check c;
  for (const auto& [n, expected] : golden::fc_counts()) {
    const auto r = fcd::verify_identity(n);
    c.expect(r.pass, "identity fails at n=" + std::to_string(n));
    c.expect(r.lhs == expected, "n=" + std::to_string(n) + ": lhs " + r.lhs.str());
    c.expect(r.rhs == expected, "n=" + std::to_string(n) + ": rhs " + r.rhs.str());
    c.expect(r.direct_count == expected,
             "n=" + std::to_string(n) + ": direct count " + r.direct_count.str());
  }
  return c;
}

Check packet_sizes() {
  Check c;
  for (int n = 4; n <= 12; ++n) {
    std::vector<fcd::BigInt> counted(static_cast<std::size_t>(n) + 1);
    for (const auto& s : fcd::all_suffixes(n)) ++counted[static_cast<std::size_t>(fcd::packet_index(s))];
    fcd::BigInt total = 0;
    for (int k = 0; k <= n; ++k) {
      const auto& got = counted[static_cast<std::size_t>(k)];
      c.expect(got == fcd::packet_size_formula(n, k),
               "n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": " + got.str() +
                   " suffixes, formula disagrees");
      total += got;
    }
    c.expect(total == fcd::BigInt(1) << (n - 1),
             "n=" + std::to_string(n) + ": packet sizes sum to " + total.str());
  }
  const auto& row7 = golden::packet_sizes_rank7();
  for (std::size_t k = 0; k < row7.size(); ++k)
    c.expect(fcd::packet_size_formula(7, static_cast<int>(k)) == row7[k],
             "rank-7 row mismatch at k=" + std::to_string(k));
  return c;
}

Check weight_graph_example() {
  Check c;
  const auto g = fcd::DynkinGraph::type_a(3);
  const auto wg = fcd::build_graph(fcd::Content::of_word({2, 1, 3, 2}), g);
  c.expect(wg.vertices.size() == 12, std::to_string(wg.vertices.size()) + " vertices");
  c.expect(wg.edges.size() == 3, std::to_string(wg.edges.size()) + " edges");
  const auto hc = fcd::homogeneous_components(wg, g, fcd::HomogeneityCheck::AllMembers);
  c.expect(hc.size() == 1, std::to_string(hc.size()) + " homogeneous components");
  if (hc.size() == 1)
    c.expect(hc.front().words == std::vector<Word>{{2, 1, 3, 2}, {2, 3, 1, 2}},
             "homogeneous component lists the wrong words");
  return c;
}

Check klr_suite() {
  Check c;
  const int height_cap = 10;
  struct Family {
    std::string name;
    fcd::DynkinGraph graph;
    std::vector<Word> words;
  };
  std::vector<Family> families;
  families.push_back({"rank-3 chain", fcd::DynkinGraph::type_a(3), fcd::fc_words_type_a(3)});
  for (int n : {4, 5}) {
    Family f{"rank-" + std::to_string(n), fcd::DynkinGraph::type_d(n), {}};
    for (const auto& lw : fcd::fc_words(n)) f.words.push_back(lw.word);
    families.push_back(std::move(f));
  }

  std::size_t modules = 0;
  for (const auto& fam : families) {
    const auto q = fcd::OrientedQuiver::default_orientation(fam.graph);
    const auto qr = q.reversed();
    std::set<fcd::Content> contents;
    for (const Word& w : fam.words) {
      const auto alpha = fcd::Content::of_word(w);
      if (alpha.height() <= height_cap) contents.insert(alpha);
    }
    for (const auto& alpha : contents) {
      const auto wg = fcd::build_graph(alpha, fam.graph, height_cap);
      for (const auto& comp : fcd::homogeneous_components(wg, fam.graph)) {
        const auto m = fcd::build_module(comp, q);
        ++modules;
        const std::string where =
            fam.name + ", content " + fcd::format_word(alpha.sorted_word());
        c.expect(fcd::verify_relations(m, q).all_pass(),
                 "relations fail (default orientation): " + where);
        c.expect(fcd::verify_relations(m, qr).all_pass(),
                 "relations fail (reversed orientation): " + where);
        c.expect(fcd::verify_grading(m, q).all_pass(), "grading fails: " + where);
      }
    }
  }
  c.expect(modules == 229,
           "built " + std::to_string(modules) + " modules, expected 14 + 48 + 167 = 229");
  return c;
}

Check triangle_methods() {
  Check c;
  const fcd::CatalanTriangle t(60);
  for (int n = 0; n <= 60; ++n)
    for (int k = 0; k <= n; ++k)
      c.expect(t.at(n, k) == fcd::catalan_entry(n, k, fcd::CatalanMethod::Closed),
               "methods disagree at (" + std::to_string(n) + "," + std::to_string(k) + ")");
  const auto& rows = golden::triangle_rows();
  for (std::size_t n = 0; n < rows.size(); ++n)
    for (std::size_t k = 0; k < rows[n].size(); ++k)
      c.expect(t.at(static_cast<int>(n), static_cast<int>(k)) == rows[n][k],
               "small block mismatch at (" + std::to_string(n) + "," + std::to_string(k) + ")");
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int index;
    const char* label;
    double budget_seconds;  // 0 = untimed
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "homogeneous canonical word counts, ranks 4..8", 5.0, counts_type_d},
      {2, "chain-diagram counts via weight-graph components", 10.0, counts_type_a},
      {3, "every collection has Catalan-triangle size, ranks 4..8", 0.0, collection_sizes},
      {4, "complete rank-4 decomposition matches the frozen listing", 0.0, rank4_decomposition},
      {5, "sigma/tau worked rows and collection-wide inverses", 0.0, sigma_tau},
      {6, "phi/rho worked diagram, inverses and size additivity", 0.0, phi_rho},
      {7, "packet summation identity, ranks 4..12", 0.0, summation_identity},
      {8, "packet sizes match the closed formula, ranks 4..12", 0.0, packet_sizes},
      {9, "rank-3 weight-graph example", 0.0, weight_graph_example},
      {10, "module relations and grading, both orientations", 60.0, klr_suite},
      {11, "triangle methods agree through n = 60", 0.0, triangle_methods},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    const auto start = Clock::now();
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.pass = false;
      result.note = std::string("unexpected exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (cr.budget_seconds > 0 && seconds > cr.budget_seconds) {
      result.pass = false;
      if (!result.note.empty()) result.note += "; ";
      result.note += "exceeded " + std::to_string(cr.budget_seconds) + " s budget";
    }
    if (!result.pass) ++failures;
    std::printf("criterion %2d %s: %s (%.2f s)%s%s\n", cr.index,
                result.pass ? "PASS" : "FAIL", cr.label, seconds,
                result.note.empty() ? "" : " -- ", result.note.c_str());
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return 1;
}
