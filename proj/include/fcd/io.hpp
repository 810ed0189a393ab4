#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "fcd/klr.hpp"
#include "fcd/packets.hpp"
#include "fcd/weight_graph.hpp"

namespace fcd {

// {"n": n, "packets": [{"k": k, "size": s,
//   "collections": [{"suffix": [...], "words": [[...], ...]}, ...]}, ...]}
nlohmann::json decomposition_to_json(int n, const std::vector<Packet>& packets);

// One row per word: columns n, k, suffix, word (words in the bracket
// notation of format_word).
std::string decomposition_to_csv(int n, const std::vector<Packet>& packets);

// {"alpha": {"1": c1, "2": c2, ...}}
nlohmann::json content_to_json(const Content& alpha);

// JSON array of word arrays.
nlohmann::json component_to_json(const Component& c);

// Per-relation pass counts and failure witnesses.
nlohmann::json relation_report_to_json(const RelationReport& report);

// Sparse triplet form, one "row,col,value" line per nonzero entry
// (0-based indices), preceded by a "row,col,value" header.
std::string linear_op_to_csv(const LinearOp& op);

}  // namespace fcd
