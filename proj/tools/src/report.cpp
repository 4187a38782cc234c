#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "fracbound/errors.hpp"

namespace fracbound::cli {

using nlohmann::ordered_json;

Report::Report(std::string command) {
  doc_["command"] = std::move(command);
  doc_["tolerance"] = kTolerance;
  doc_["inputs"] = ordered_json::object();
  doc_["results"] = ordered_json::array();
  doc_["assertions"] = ordered_json::array();
}

void Report::add_input(const std::string& name, const std::string& value) {
  doc_["inputs"][name] = value;
}

void Report::add_result(const std::string& name, double value) {
  doc_["results"].push_back({{"name", name}, {"value", value}});
}

void Report::add_result(const std::string& name, const std::string& value) {
  doc_["results"].push_back({{"name", name}, {"value", value}});
}

void Report::add_result(const std::string& name, const ordered_json& value) {
  doc_["results"].push_back({{"name", name}, {"value", value}});
}

namespace {

void push_assertion(ordered_json& doc, const std::string& name, bool holds,
                    double slack) {
  doc["assertions"].push_back({{"name", name}, {"holds", holds}, {"slack", slack}});
}

}  // namespace

void Report::assert_le(const std::string& name, double lhs, double rhs) {
  double slack = rhs - lhs;
  bool holds = slack >= -kTolerance;
  push_assertion(doc_, name, holds, slack);
  all_hold_ = all_hold_ && holds;
}

void Report::assert_eq(const std::string& name, double lhs, double rhs) {
  double slack = -std::abs(lhs - rhs);
  bool holds = slack >= -kTolerance;
  push_assertion(doc_, name, holds, slack);
  all_hold_ = all_hold_ && holds;
}

void Report::assert_true(const std::string& name, bool holds) {
  push_assertion(doc_, name, holds, holds ? 0.0 : -1.0);
  all_hold_ = all_hold_ && holds;
}

void Report::emit(const std::optional<std::string>& json_path) const {
  const std::string text = doc_.dump(2) + "\n";
  if (json_path && *json_path == "-") {
    std::fputs(text.c_str(), stdout);
    return;
  }

  std::printf("command: %s\n", doc_["command"].get<std::string>().c_str());
  for (const auto& [k, v] : doc_["inputs"].items())
    std::printf("  input  %-26s %s\n", k.c_str(), v.get<std::string>().c_str());
  for (const auto& r : doc_["results"]) {
    const auto& v = r["value"];
    std::string shown = v.is_string() ? v.get<std::string>() : v.dump();
    std::printf("  result %-26s %s\n", r["name"].get<std::string>().c_str(),
                shown.c_str());
  }
  for (const auto& a : doc_["assertions"])
    std::printf("  %s %-24s slack=%.12g\n",
                a["holds"].get<bool>() ? "[ok]  " : "[FAIL]",
                a["name"].get<std::string>().c_str(), a["slack"].get<double>());

  if (json_path) {
    std::ofstream out(*json_path, std::ios::binary);
    if (!out) throw parse_error("cannot write report to '" + *json_path + "'");
    out << text;
  }
}

}  // namespace fracbound::cli
