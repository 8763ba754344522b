#include "hammock/report.hpp"

#include <iomanip>
#include <sstream>

namespace hammock {

Json to_json(const Report& r, bool with_timings) {
  Json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["bounds"] = r.bounds;
  j["verdict"] = std::string(to_string(r.verdict));
  j["witnesses"] = r.witnesses;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (with_timings) {
    Json t = Json::object();
    for (const auto& [name, seconds] : r.timings) t[name] = seconds;
    j["timings"] = t;
  }
  return j;
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(std::ostringstream& os, const Json& v, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (value.is_structured() && !value.empty()) {
        os << pad << key << ":\n";
        render(os, value, indent + 1);
      } else {
        os << pad << key << ": " << (value.is_structured() ? std::string(value.is_array() ? "[]" : "{}") : scalar(value))
           << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (item.is_structured() && !item.empty()) {
        os << pad << "-\n";
        render(os, item, indent + 1);
      } else {
        os << pad << "- " << scalar(item) << "\n";
      }
    }
  } else {
    os << pad << scalar(v) << "\n";
  }
}

}  // namespace

std::string to_text(const Report& r, bool with_timings) {
  std::ostringstream os;
  os << r.command << ": " << to_string(r.verdict) << "\n";
  auto section = [&](const char* name, const Json& v) {
    if (v.empty()) return;
    os << name << ":\n";
    render(os, v, 1);
  };
  section("inputs", r.inputs);
  section("bounds", r.bounds);
  section("witnesses", r.witnesses);
  if (r.counterexample) section("counterexample", *r.counterexample);
  if (with_timings && !r.timings.empty()) {
    os << "timings:\n";
    for (const auto& [name, seconds] : r.timings) {
      os << "  " << name << ": " << std::fixed << std::setprecision(3) << seconds << "s\n";
    }
  }
  return os.str();
}

Json to_json(const Violation& v) {
  Json j;
  j["law"] = v.law;
  j["message"] = v.message;
  j["witnesses"] = v.witnesses;
  return j;
}

Json to_json(const FinCat& c, const ZigZag& z) { return to_string(c, z); }

Json to_json(const FinCat& c, const Ladder& l) {
  Json j;
  j["source"] = to_string(c, l.source);
  j["target"] = to_string(c, l.target);
  Json cols = Json::array();
  for (auto v : l.columns) cols.push_back(c.morphism_name(v));
  j["columns"] = cols;
  return j;
}

Json to_json(const TowerReport& t) {
  Json j;
  Json levels = Json::array();
  for (std::size_t i = 0; i < t.levels.size(); ++i) {
    const auto& l = t.levels[i];
    Json level;
    level["stage"] = l.stage;
    level["zigzags"] = l.zigzags;
    level["components"] = l.components;
    if (i + 1 < t.levels.size()) {
      level["map_to_next"] = l.map_to_next;
      level["bijective_to_next"] = l.bijective_to_next;
    }
    levels.push_back(level);
  }
  j["levels"] = levels;
  j["tower"] = std::string(to_string(t.verdict));
  j["assume_model"] = t.assume_model;
  if (t.final_components) {
    j["components"] = *t.final_components;
  } else {
    j["components"] = nullptr;
  }
  return j;
}

Json to_json(const FinCat& c, const SaturationReport& s) {
  Json j;
  j["from"] = c.object_name(s.from);
  j["to"] = c.object_name(s.to);
  j["saturation"] = std::string(to_string(s.verdict));
  Json classes = Json::array();
  for (const auto& w : s.classes) classes.push_back(to_string(c, w));
  j["classes"] = classes;
  j["class_count"] = s.classes.size();
  j["words_explored"] = s.words_explored;
  if (!s.reason.empty()) j["reason"] = s.reason;
  return j;
}

Json to_json(const CheckResult& c) {
  Json j;
  j["check"] = c.label;
  j["verdict"] = std::string(to_string(c.verdict));
  j["detail"] = c.detail;
  return j;
}

Json to_json(const TheoremReport& t) {
  Json j;
  j["name"] = t.name;
  j["verdict"] = std::string(to_string(t.verdict));
  Json checks = Json::array();
  for (const auto& c : t.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  j["notes"] = t.notes;
  return j;
}

}  // namespace hammock
