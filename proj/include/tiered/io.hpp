#pragma once

#include <string>

#include <json.hpp>

#include "tiered/polynomial.hpp"
#include "tiered/polyomino.hpp"
#include "tiered/ps_algebra.hpp"
#include "tiered/sandpile.hpp"
#include "tiered/tiered_graph.hpp"

namespace tiered::io {

using nlohmann::json;

// Throws IoError when unreadable, ParseError on malformed JSON.
json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

// {"n", "m", "tier": [...], "edges": [[i, j], ...]}. Without "tier" the graph
// is read with every vertex on tier 1 and `tiered` is false.
struct GraphDocument {
  TieredGraph graph;
  bool tiered = true;
};
GraphDocument graph_from_json(const json& j);
json to_json(const TieredGraph& g);
json to_json(const Graph& g);

// {"sink": s, "grains": {"v": k, ...}}; absent vertices hold zero.
Configuration configuration_from_json(const json& j, int vertex_count);
json to_json(const Configuration& c);

OrderedSetPartition partition_from_json(const json& j);
json to_json(const OrderedSetPartition& u);

// {"upper", "lower", "labels": [{"cell": [c, r], "label", "color"}], "U"}.
LabelledPolyomino lpp_from_json(const json& j);
json to_json(const LabelledPolyomino& p);

// Integers beyond 64 bits are written as decimal strings.
json to_json(const Integer& x);
json to_json(const TuttePolynomial& t);   // {"terms": [{"x", "y", "c"}]}
json coefficients_json(const Polynomial& p);  // [c0, c1, ...]

json to_json(const GradedAlgebraReport& r);
std::string to_csv(const GradedAlgebraReport& r);

// Tiers become ranks, lowest tier at the bottom.
std::string to_dot(const TieredGraph& g);

// FNV-1a, 16 hex digits.
std::string digest(const std::string& bytes);

}  // namespace tiered::io
