#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fcd/catalan.hpp"
#include "fcd/errors.hpp"
#include "fcd/fc_enum.hpp"
#include "fcd/homogeneity.hpp"
#include "fcd/io.hpp"
#include "fcd/klr.hpp"
#include "fcd/packets.hpp"
#include "fcd/weight_graph.hpp"
#include "fcd/word.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int n = 0;
  int k = -1;
  int rows = 8;
  int jobs = 0;
  int height_cap = fcd::kDefaultHeightCap;
  std::string format = "table";
  std::string out_path;
  std::vector<std::string> checks = {"counts", "packets", "bijections", "identity"};
};

// Routes command output to --out or standard output.
class Sink {
public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::string plural(std::size_t count, const char* noun) {
  return std::to_string(count) + " " + noun + (count == 1 ? "" : "s");
}

int cmd_enumerate(const RunConfig& cfg) {
  Sink sink(cfg.out_path);
  std::ostream& os = sink.stream();
  if (cfg.format == "json") {
    os << fcd::decomposition_to_json(cfg.n, fcd::decompose(cfg.n)).dump(2) << '\n';
    return kExitPass;
  }
  if (cfg.format == "csv") {
    os << fcd::decomposition_to_csv(cfg.n, fcd::decompose(cfg.n));
    return kExitPass;
  }
  std::size_t total = 0;
  for (const fcd::LabeledWord& lw : fcd::fc_words(cfg.n, cfg.jobs)) {
    const fcd::Suffix suffix{cfg.n, lw.form.suffix_params};
    os << "k=" << fcd::packet_index(suffix) << " suffix=" << fcd::format_word(suffix.params)
       << " word=" << fcd::format_word(lw.word) << '\n';
    ++total;
  }
  os << total << '\n';
  return kExitPass;
}

int cmd_packets(const RunConfig& cfg) {
  Sink sink(cfg.out_path);
  std::ostream& os = sink.stream();
  std::vector<fcd::Packet> packets = fcd::decompose(cfg.n);

  if (cfg.k >= 0) {
    if (cfg.k > cfg.n) {
      std::cerr << "k must be between 0 and n\n";
      return kExitUsage;
    }
    const fcd::Packet& p = packets[static_cast<std::size_t>(cfg.k)];
    if (cfg.format == "json") {
      os << fcd::decomposition_to_json(cfg.n, {p}).dump(2) << '\n';
      return kExitPass;
    }
    if (cfg.format == "csv") {
      os << fcd::decomposition_to_csv(cfg.n, {p});
      return kExitPass;
    }
    for (const fcd::Collection& c : p.collections) {
      os << "suffix=" << fcd::format_word(c.suffix.params) << " ("
         << plural(c.words.size(), "word") << ")\n";
      for (const fcd::Word& w : c.words) os << "  " << fcd::format_word(w) << '\n';
    }
    return kExitPass;
  }

  if (cfg.format == "json") {
    os << fcd::decomposition_to_json(cfg.n, packets).dump(2) << '\n';
    return kExitPass;
  }
  if (cfg.format == "csv") {
    os << fcd::decomposition_to_csv(cfg.n, packets);
    return kExitPass;
  }
  for (const fcd::Packet& p : packets) {
    std::size_t collection_size = p.collections.empty() ? 0 : p.collections.front().size();
    os << "k=" << p.k << ": " << plural(p.size(), "collection") << " × "
       << plural(collection_size, "word") << '\n';
  }
  return kExitPass;
}

bool check_counts(const RunConfig& cfg, std::ostream& os) {
  const fcd::BigInt expected = fcd::fc_count_type_d(cfg.n);
  const std::uint64_t counted = fcd::fc_count(cfg.n, cfg.jobs);
  const bool pass = fcd::BigInt(counted) == expected;
  os << "counts: " << counted << " = " << expected << (pass ? " PASS" : " FAIL") << '\n';
  return pass;
}

bool check_packets(const RunConfig& cfg, std::ostream& os) {
  std::map<int, fcd::BigInt> counted;
  for (const fcd::Suffix& s : fcd::all_suffixes(cfg.n)) ++counted[fcd::packet_index(s)];
  bool pass = true;
  fcd::BigInt total = 0;
  std::string sizes;
  for (int k = 0; k <= cfg.n; ++k) {
    const fcd::BigInt have = counted.count(k) ? counted[k] : 0;
    if (have != fcd::packet_size_formula(cfg.n, k)) pass = false;
    total += have;
    if (k) sizes += ',';
    sizes += have.str();
  }
  if (total != (fcd::BigInt(1) << (cfg.n - 1))) pass = false;
  os << "packets: sizes " << sizes << " total " << total.str() << (pass ? " PASS" : " FAIL")
     << '\n';
  return pass;
}

// Exhaustive inverse-and-membership checks for the collection bijections.
bool check_bijections(const RunConfig& cfg, std::ostream& os) {
  const int n = cfg.n;
  const fcd::DynkinGraph g = fcd::DynkinGraph::type_d(n);
  bool pass = true;

  for (int k = 1; k <= n - 3; ++k) {
    const fcd::Collection from = fcd::build_collection({n, {k}}, g);
    const fcd::Collection to = fcd::build_collection({n, {k + 1, n - 1}}, g);
    if (from.size() != to.size()) pass = false;
    std::set<fcd::Word> image;
    for (const fcd::Word& w : from.words) {
      const fcd::Word v = fcd::sigma(w, n, k);
      if (!std::binary_search(to.words.begin(), to.words.end(), v)) pass = false;
      if (fcd::tau(v, n, k) != w) pass = false;
      image.insert(v);
    }
    if (image.size() != to.size()) pass = false;
  }
  os << "bijections: sigma/tau inverse on k=1.." << n - 3 << (pass ? " PASS" : " FAIL") << '\n';

  if (n >= 5) {
    bool phi_pass = true;
    for (int k = 1; k <= n - 2; ++k) {
      const fcd::Collection dom1 = fcd::build_collection({n, {k, n - 1}}, g);
      const fcd::Collection dom2 =
          fcd::build_collection({n - 1, {k}}, fcd::DynkinGraph::type_d(n - 1));
      const fcd::Collection codom = fcd::build_collection({n, {k}}, g);
      if (dom1.size() + dom2.size() != codom.size()) phi_pass = false;
      std::set<fcd::Word> image;
      for (const fcd::Collection* dom : {&dom1, &dom2})
        for (const fcd::Word& w : dom->words) {
          const fcd::Word v = fcd::phi(w, n, k);
          if (!std::binary_search(codom.words.begin(), codom.words.end(), v)) phi_pass = false;
          if (fcd::rho(v, n, k) != w) phi_pass = false;
          image.insert(v);
        }
      if (image.size() != codom.size()) phi_pass = false;
    }
    os << "bijections: phi/rho inverse on k=1.." << n - 2 << (phi_pass ? " PASS" : " FAIL")
       << '\n';
    pass = pass && phi_pass;
  } else {
    os << "bijections: phi/rho n/a at rank 4 (recursion base)\n";
  }
  return pass;
}

bool check_identity(const RunConfig& cfg, std::ostream& os) {
  const fcd::IdentityReport report = fcd::verify_identity(cfg.n, cfg.jobs);
  os << report.lhs.str() << " = " << report.rhs.str() << (report.pass ? " PASS" : " FAIL")
     << '\n';
  return report.pass;
}

// Weight-graph cross-check: FC canonical words and homogeneous components
// of their contents correspond one to one (commutation class = component).
bool check_weightgraph(const RunConfig& cfg, std::ostream& os) {
  const fcd::DynkinGraph g = fcd::DynkinGraph::type_d(cfg.n);
  std::map<fcd::Content, std::vector<fcd::Word>> by_content;
  for (fcd::LabeledWord& lw : fcd::fc_words(cfg.n, cfg.jobs))
    by_content[fcd::Content::of_word(lw.word)].push_back(std::move(lw.word));

  bool pass = true;
  std::size_t components_total = 0, words_total = 0;
  for (const auto& [alpha, fc_members] : by_content) {
    const fcd::WeightGraph wg = fcd::build_graph(alpha, g, cfg.height_cap);
    const auto homogeneous =
        fcd::homogeneous_components(wg, g, fcd::HomogeneityCheck::AllMembers);
    components_total += homogeneous.size();
    words_total += fc_members.size();
    if (homogeneous.size() != fc_members.size()) pass = false;

    // Each FC word's commutation class must be exactly one component.
    for (const fcd::Word& w : fc_members) {
      const std::vector<fcd::Word> cls = fcd::commutation_class(w, g);
      const bool found = std::any_of(homogeneous.begin(), homogeneous.end(),
                                     [&](const fcd::Component& c) { return c.words == cls; });
      if (!found) pass = false;
    }
  }
  os << "weightgraph: " << components_total << " homogeneous components for " << words_total
     << " words" << (pass ? " PASS" : " FAIL") << '\n';
  return pass;
}

bool check_klr(const RunConfig& cfg, std::ostream& os) {
  const fcd::DynkinGraph g = fcd::DynkinGraph::type_d(cfg.n);
  const fcd::OrientedQuiver forward = fcd::OrientedQuiver::default_orientation(g);
  const fcd::OrientedQuiver backward = forward.reversed();

  std::set<fcd::Content> contents;
  for (const fcd::LabeledWord& lw : fcd::fc_words(cfg.n, cfg.jobs))
    contents.insert(fcd::Content::of_word(lw.word));

  bool pass = true;
  std::size_t modules = 0;
  for (const fcd::Content& alpha : contents) {
    const fcd::WeightGraph wg = fcd::build_graph(alpha, g, cfg.height_cap);
    for (const fcd::Component& c : fcd::homogeneous_components(wg, g)) {
      for (const fcd::OrientedQuiver* q : {&forward, &backward}) {
        const fcd::HomogeneousModule m = fcd::build_module(c, *q);
        if (!fcd::verify_relations(m, *q).all_pass()) pass = false;
        if (!fcd::verify_grading(m, *q).all_pass()) pass = false;
      }
      ++modules;
    }
  }
  os << "klr: " << modules << " modules verified under both orientations"
     << (pass ? " PASS" : " FAIL") << '\n';
  return pass;
}

int cmd_verify(const RunConfig& cfg) {
  Sink sink(cfg.out_path);
  std::ostream& os = sink.stream();
  bool pass = true;
  for (const std::string& check : cfg.checks) {
    if (check == "counts")
      pass = check_counts(cfg, os) && pass;
    else if (check == "packets")
      pass = check_packets(cfg, os) && pass;
    else if (check == "bijections")
      pass = check_bijections(cfg, os) && pass;
    else if (check == "identity")
      pass = check_identity(cfg, os) && pass;
    else if (check == "weightgraph")
      pass = check_weightgraph(cfg, os) && pass;
    else if (check == "klr")
      pass = check_klr(cfg, os) && pass;
  }
  return pass ? kExitPass : kExitFail;
}

int cmd_catalan(const RunConfig& cfg) {
  Sink sink(cfg.out_path);
  std::ostream& os = sink.stream();
  const fcd::CatalanTriangle triangle(cfg.rows - 1);
  bool pass = true;
  for (int n = 0; n < cfg.rows; ++n) {
    std::string line;
    for (int k = 0; k <= n; ++k) {
      const fcd::BigInt& value = triangle.at(n, k);
      if (value != fcd::catalan_entry(n, k, fcd::CatalanMethod::Closed)) pass = false;
      if (k) line += ' ';
      line += value.str();
    }
    os << line << '\n';
  }
  if (!pass) {
    os << "method mismatch\n";
    return kExitFail;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully commutative elements of the type D Coxeter group: "
               "canonical words, packets, bijections, KLR modules"};
  app.require_subcommand(1);

  RunConfig cfg;
  const CLI::Validator rank_check(
      [](std::string& value) -> std::string {
        try {
          if (std::stoll(value) < 4) return "n must be ≥ 4";
        } catch (const std::exception&) {
          return "n must be an integer";
        }
        return {};
      },
      "n must be ≥ 4", "RANK");

  auto add_common = [&](CLI::App* sub, bool needs_n) {
    if (needs_n)
      sub->add_option("--n", cfg.n, "rank of the type D diagram")->required()->check(rank_check);
    sub->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
    sub->add_option("--jobs", cfg.jobs, "parallel worker count (0 = library default)");
    return sub;
  };

  CLI::App* enumerate = add_common(
      app.add_subcommand("enumerate", "list the homogeneous canonical words with packet labels"),
      true);
  enumerate->add_option("--format", cfg.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  CLI::App* packets = add_common(
      app.add_subcommand("packets", "packet decomposition: sizes, or one packet in full"), true);
  packets->add_option("--k", cfg.k, "list only the packet with this index")
      ->check(CLI::NonNegativeNumber);
  packets->add_option("--format", cfg.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  CLI::App* verify =
      add_common(app.add_subcommand("verify", "run verification suites"), true);
  verify
      ->add_option("--check", cfg.checks,
                   "suites to run (default: counts,packets,bijections,identity)")
      ->delimiter(',')
      ->check(CLI::IsMember(
          {"counts", "packets", "bijections", "identity", "weightgraph", "klr"}));
  verify->add_option("--height-cap", cfg.height_cap,
                     "largest content height the weight-graph suites may expand");

  CLI::App* catalan =
      add_common(app.add_subcommand("catalan", "print the Catalan triangle"), false);
  catalan->add_option("--rows", cfg.rows, "number of rows to print")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (packets->parsed()) return cmd_packets(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (catalan->parsed()) return cmd_catalan(cfg);
  } catch (const fcd::ResourceLimitError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
