#include "fcd/io.hpp"

namespace fcd {

namespace {
nlohmann::json word_to_json(const Word& w) { return nlohmann::json(w); }
}  // namespace

nlohmann::json decomposition_to_json(int n, const std::vector<Packet>& packets) {
  nlohmann::json out;
  out["n"] = n;
  out["packets"] = nlohmann::json::array();
  for (const Packet& p : packets) {
    nlohmann::json jp;
    jp["k"] = p.k;
    jp["size"] = p.collections.size();
    jp["collections"] = nlohmann::json::array();
    for (const Collection& c : p.collections) {
      nlohmann::json jc;
      jc["suffix"] = nlohmann::json(c.suffix.params);
      jc["words"] = nlohmann::json::array();
      for (const Word& w : c.words) jc["words"].push_back(word_to_json(w));
      jp["collections"].push_back(std::move(jc));
    }
    out["packets"].push_back(std::move(jp));
  }
  return out;
}

std::string decomposition_to_csv(int n, const std::vector<Packet>& packets) {
  std::string out = "n,k,suffix,word\n";
  for (const Packet& p : packets) {
    for (const Collection& c : p.collections) {
      const std::string suffix = format_word(c.suffix.params);
      for (const Word& w : c.words) {
        out += std::to_string(n);
        out += ',';
        out += std::to_string(p.k);
        out += ",\"";
        out += suffix;
        out += "\",\"";
        out += format_word(w);
        out += "\"\n";
      }
    }
  }
  return out;
}

nlohmann::json content_to_json(const Content& alpha) {
  nlohmann::json counts = nlohmann::json::object();
  for (auto [letter, count] : alpha.multiplicities()) counts[std::to_string(letter)] = count;
  return nlohmann::json{{"alpha", counts}};
}

nlohmann::json component_to_json(const Component& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const Word& w : c.words) out.push_back(word_to_json(w));
  return out;
}

nlohmann::json relation_report_to_json(const RelationReport& report) {
  nlohmann::json out;
  out["all_pass"] = report.all_pass();
  out["relations"] = nlohmann::json::array();
  for (const RelationCheck& rc : report.relations) {
    nlohmann::json jr;
    jr["relation"] = rc.relation;
    jr["cases_checked"] = rc.cases_checked;
    jr["failures"] = nlohmann::json::array();
    for (const RelationFailure& f : rc.failures) {
      jr["failures"].push_back({{"relation", f.relation},
                                {"k", f.k},
                                {"l", f.l},
                                {"idempotent", word_to_json(f.idempotent)}});
    }
    out["relations"].push_back(std::move(jr));
  }
  return out;
}

std::string linear_op_to_csv(const LinearOp& op) {
  std::string out = "row,col,value\n";
  for (std::size_t i = 0; i < op.dim(); ++i)
    for (std::size_t j = 0; j < op.dim(); ++j)
      if (int v = op.at(i, j); v != 0) {
        out += std::to_string(i);
        out += ',';
        out += std::to_string(j);
        out += ',';
        out += std::to_string(v);
        out += '\n';
      }
  return out;
}

}  // namespace fcd
