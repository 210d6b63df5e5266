#include "aspec/graph_json.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace aspec {

namespace {

std::vector<std::pair<int, int>> parse_pairs(const nlohmann::json& arr, const char* what,
                                             bool require_ordered) {
  if (!arr.is_array()) fail(errc::invalid_json, std::string(what) + " must be an array");
  std::vector<std::pair<int, int>> out;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      fail(errc::invalid_json, std::string(what) + " entries must be pairs of integers");
    int u = item[0].get<int>(), v = item[1].get<int>();
    if (require_ordered && u >= v)
      fail(errc::invalid_json, "undirected pairs must satisfy u < v");
    out.emplace_back(u, v);
  }
  return out;
}

} // namespace

MixedGraph parse_graph_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::invalid_json, "malformed JSON");
  if (!j.is_object()) fail(errc::invalid_json, "graph must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "n" && key != "arcs" && key != "undirected")
      fail(errc::invalid_json, "unknown key \"" + key + "\"");
  }
  if (!j.contains("n") || !j["n"].is_number_integer())
    fail(errc::invalid_json, "\"n\" must be an integer");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> arcs, undirected;
  if (j.contains("arcs")) arcs = parse_pairs(j["arcs"], "arcs", false);
  if (j.contains("undirected")) undirected = parse_pairs(j["undirected"], "undirected", true);
  return new_mixed_graph(n, arcs, undirected);
}

MixedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_json, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_graph_json(text);
}

std::string graph_json_string(const MixedGraph& g) {
  std::vector<std::pair<int, int>> arcs, undirected;
  for (const auto& [pair, r] : g.relations()) {
    switch (r) {
      case Rel::arc_forward: arcs.emplace_back(pair.first, pair.second); break;
      case Rel::arc_backward: arcs.emplace_back(pair.second, pair.first); break;
      case Rel::undirected: undirected.emplace_back(pair.first, pair.second); break;
    }
  }
  std::sort(arcs.begin(), arcs.end());
  nlohmann::ordered_json j;
  j["n"] = g.order();
  auto ja = nlohmann::ordered_json::array();
  for (auto [t, h] : arcs) ja.push_back({t, h});
  auto ju = nlohmann::ordered_json::array();
  for (auto [u, v] : undirected) ju.push_back({u, v});
  j["arcs"] = ja;
  j["undirected"] = ju;
  return j.dump();
}

} // namespace aspec
