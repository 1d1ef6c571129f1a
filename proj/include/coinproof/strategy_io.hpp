// JSON interchange. Strategy files use the canonical schema
//   { "t":int, "f":int, "d":int,
//     "piles":[{"id":str,"size":int,"fakes":int},...],
//     "weighings":[{"left":[ids],"right":[ids]},...] }
// Unknown keys are rejected. Reports and tables serialize with fixed key
// order, counts as decimal strings, ratios as {"fraction","decimal"}.
#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "coinproof/model.hpp"
#include "coinproof/verifier.hpp"

namespace coinproof {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

Strategy strategy_from_json(const Json& j);
Strategy strategy_from_string(const std::string& text);
Strategy strategy_from_file(const std::string& path);

Json strategy_to_json(const Strategy& strategy);
void strategy_to_file(const Strategy& strategy, const std::string& path);

Json ratio_to_json(const Ratio& r);
Json report_to_json(const AdmissibleReport& report);
Json subset_table_to_json(const std::vector<SubsetRow>& rows);

}  // namespace coinproof
