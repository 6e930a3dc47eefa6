#include "report.hpp"

#include <cctype>
#include <limits>

#include "graph.hpp"

namespace splinez {

nlohmann::json json_from_int(const Int& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

static bool looks_like_integer(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int int_from_json(const nlohmann::json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_number_unsigned()) {
    unsigned long long u = j.get<unsigned long long>();
    Int v;
    mpz_import(v.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
    return v;
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!looks_like_integer(s)) fail(errc::parse_error, path + ": not an integer: \"" + s + "\"");
    return Int(s);
  }
  fail(errc::parse_error, path + ": expected an integer");
}

nlohmann::json json_from_vec(const std::vector<Int>& xs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& x : xs) arr.push_back(json_from_int(x));
  return arr;
}

std::vector<Int> vec_from_json(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) fail(errc::parse_error, path + ": expected an array");
  std::vector<Int> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(int_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

nlohmann::json graph_to_json(const EdgeLabeledGraph& g) {
  nlohmann::json doc;
  doc["m"] = json_from_vec(g.multipliers());
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges())
    edges.push_back(nlohmann::json::array({e.u + 1, e.v + 1, json_from_int(e.r)}));
  doc["edges"] = edges;
  return doc;
}

std::vector<Int> parse_int_csv(const std::string& text) {
  std::vector<Int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) fail(errc::parse_error, "empty entry in integer list");
    item = item.substr(a, b - a + 1);
    if (!looks_like_integer(item)) fail(errc::parse_error, "not an integer: \"" + item + "\"");
    out.emplace_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace splinez
