#pragma once

// Structured reports shared by the command-line tool and the tests:
// {command, inputs, bounds, verdict, witnesses[], counterexample?, timings}.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hammock/common.hpp"
#include "hammock/hammock.hpp"
#include "hammock/oracle.hpp"
#include "hammock/theorems.hpp"

namespace hammock {

using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json bounds = Json::object();
  Verdict verdict = Verdict::pass;
  Json witnesses = Json::array();
  std::optional<Json> counterexample;
  std::vector<std::pair<std::string, double>> timings;  // seconds
};

Json to_json(const Report& r, bool with_timings = true);
/// Line-oriented rendering of the same content.
std::string to_text(const Report& r, bool with_timings = true);

Json to_json(const Violation& v);
Json to_json(const FinCat& c, const ZigZag& z);
Json to_json(const FinCat& c, const Ladder& l);
Json to_json(const TowerReport& t);
Json to_json(const FinCat& c, const SaturationReport& s);
Json to_json(const CheckResult& c);
Json to_json(const TheoremReport& t);

}  // namespace hammock
