#include "coinproof/strategy_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace coinproof {

namespace {

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) throw ParseError(where + ": unknown key '" + it.key() + "'");
  }
}

long long get_int(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + ": missing key '" + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
  return v.get<long long>();
}

std::vector<std::string> get_id_list(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + ": missing key '" + key + "'");
  const Json& v = j.at(key);
  if (!v.is_array()) throw ParseError(where + "." + key + ": expected an array of pile ids");
  std::vector<std::string> ids;
  for (const Json& e : v) {
    if (!e.is_string()) throw ParseError(where + "." + key + ": pile ids must be strings");
    ids.push_back(e.get<std::string>());
  }
  return ids;
}

}  // namespace

Strategy strategy_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("strategy: expected a JSON object");
  reject_unknown_keys(j, {"t", "f", "d", "piles", "weighings"}, "strategy");

  Strategy s;
  s.params.t = get_int(j, "t", "strategy");
  s.params.f = get_int(j, "f", "strategy");
  s.params.d = get_int(j, "d", "strategy");

  if (!j.contains("piles") || !j.at("piles").is_array()) throw ParseError("strategy.piles: expected an array");
  size_t i = 0;
  for (const Json& pj : j.at("piles")) {
    const std::string where = "piles[" + std::to_string(i++) + "]";
    if (!pj.is_object()) throw ParseError(where + ": expected an object");
    reject_unknown_keys(pj, {"id", "size", "fakes"}, where);
    if (!pj.contains("id") || !pj.at("id").is_string()) throw ParseError(where + ".id: expected a string");
    Pile pile;
    pile.id = pj.at("id").get<std::string>();
    pile.size = get_int(pj, "size", where);
    pile.fakes = get_int(pj, "fakes", where);
    s.piles.push_back(std::move(pile));
  }

  if (!j.contains("weighings") || !j.at("weighings").is_array()) {
    throw ParseError("strategy.weighings: expected an array");
  }
  i = 0;
  for (const Json& wj : j.at("weighings")) {
    const std::string where = "weighings[" + std::to_string(i++) + "]";
    if (!wj.is_object()) throw ParseError(where + ": expected an object");
    reject_unknown_keys(wj, {"left", "right"}, where);
    Weighing w;
    w.left = get_id_list(wj, "left", where);
    w.right = get_id_list(wj, "right", where);
    s.weighings.push_back(std::move(w));
  }
  return s;
}

Strategy strategy_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("strategy: ") + e.what());
  }
  return strategy_from_json(j);
}

Strategy strategy_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open strategy file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return strategy_from_string(buffer.str());
}

Json strategy_to_json(const Strategy& strategy) {
  Json j;
  j["t"] = strategy.params.t;
  j["f"] = strategy.params.f;
  j["d"] = strategy.params.d;
  j["piles"] = Json::array();
  for (const Pile& p : strategy.piles) {
    j["piles"].push_back({{"id", p.id}, {"size", p.size}, {"fakes", p.fakes}});
  }
  j["weighings"] = Json::array();
  for (const Weighing& w : strategy.weighings) {
    j["weighings"].push_back({{"left", w.left}, {"right", w.right}});
  }
  return j;
}

void strategy_to_file(const Strategy& strategy, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write strategy file: " + path);
  out << strategy_to_json(strategy).dump(2) << "\n";
}

Json ratio_to_json(const Ratio& r) {
  return {{"fraction", r.fraction_string()}, {"decimal", r.value()}};
}

Json report_to_json(const AdmissibleReport& report) {
  Json j;
  j["syndrome"] = report.syndrome;
  j["count_f"] = report.count_f.str();
  j["count_d"] = report.count_d.str();
  j["success"] = report.success;
  j["discreet"] = report.discreet;
  j["X"] = ratio_to_json(report.X);
  j["R"] = ratio_to_json(report.R);
  j["per_class"] = Json::array();
  for (const auto& values : report.per_class) j["per_class"].push_back(values);
  j["class_sizes"] = report.class_sizes;
  return j;
}

Json subset_table_to_json(const std::vector<SubsetRow>& rows) {
  Json j = Json::array();
  for (const SubsetRow& row : rows) {
    j.push_back({{"weighings", row.weighing_indices},
                 {"count_f", row.count_f.str()},
                 {"count_d", row.count_d.str()}});
  }
  return j;
}

}  // namespace coinproof
