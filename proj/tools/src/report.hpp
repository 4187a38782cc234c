#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace fracbound::cli {

inline constexpr double kTolerance = 1e-9;

// Accumulates named results and asserted inequalities, prints a plain-text
// table, and optionally writes the canonical JSON document.  Every assertion
// is normalized so that it holds iff slack >= -tolerance:
//   "a <= b"  ->  slack = b - a
//   "a == b"  ->  slack = -|a - b|
class Report {
 public:
  explicit Report(std::string command);

  void add_input(const std::string& name, const std::string& value);

  void add_result(const std::string& name, double value);
  void add_result(const std::string& name, const std::string& value);
  void add_result(const std::string& name, const nlohmann::ordered_json& value);

  void assert_le(const std::string& name, double lhs, double rhs);
  void assert_eq(const std::string& name, double lhs, double rhs);
  void assert_true(const std::string& name, bool holds);

  bool all_hold() const { return all_hold_; }

  // Prints the human-readable table to stdout; when json_path is set, also
  // writes the JSON document ("-" writes it to stdout instead of the table).
  void emit(const std::optional<std::string>& json_path) const;

  // 0 when every assertion holds, 5 otherwise.
  int exit_code() const { return all_hold_ ? 0 : 5; }

  const nlohmann::ordered_json& document() const { return doc_; }

 private:
  nlohmann::ordered_json doc_;
  bool all_hold_ = true;
};

}  // namespace fracbound::cli
