#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "base.hpp"

namespace splinez {

class EdgeLabeledGraph;

// Integers serialize as JSON numbers while they fit in int64 and as decimal
// strings beyond that; both forms are accepted on input.
nlohmann::json json_from_int(const Int& v);
Int int_from_json(const nlohmann::json& j, const std::string& path);

nlohmann::json json_from_vec(const std::vector<Int>& xs);
std::vector<Int> vec_from_json(const nlohmann::json& j, const std::string& path);

nlohmann::json graph_to_json(const EdgeLabeledGraph& g);

// "36,96,0" -> {36, 96, 0}; whitespace around entries is allowed.
std::vector<Int> parse_int_csv(const std::string& text);

}  // namespace splinez
