#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qll/number/algebraic_real.hpp"
#include "qll/number/cyclotomic.hpp"
#include "qll/number/polynomial.hpp"
#include "qll/quaternion/hurwitz.hpp"

namespace qll {

inline constexpr const char* kReportSchema = "qll-report/1";

enum class Status { pass, fail, inconclusive, config_error };
std::string to_string(Status s);
/// 0 pass, 1 fail, 2 config error, 3 inconclusive.
int exit_code(Status s);
/// Worst of two statuses: config_error > fail > inconclusive > pass.
Status worst(Status a, Status b);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string suite;
  nlohmann::json parameters = nlohmann::json::object();
  Status status = Status::pass;
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json results = nlohmann::json::object();
  std::optional<double> timing_seconds;
  std::optional<Table> table;
  std::vector<Report> suites;

  /// Adds a sub-report and folds its status into this one.
  void add_suite(Report sub);
};

enum class Format { json, csv, text };
/// Throws ConfigError for an unknown name.
Format parse_format(const std::string& name);

nlohmann::json to_json(const Report& report);
/**
 * Deterministic serialization. JSON keys are sorted and sub-suites ordered by
 * name; CSV is only available for reports carrying a table (ConfigError
 * otherwise). Throws std::logic_error for a failing report with no witness.
 */
std::string emit_report(const Report& report, Format format);

// Exact values serialize as strings; quaternions as doubled coordinates.
nlohmann::json to_json(const HurwitzQuaternion& x);
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const AlgebraicReal& a);
nlohmann::json to_json(const SymbolicValue& v);
nlohmann::json to_json(const CyclotomicValue& v);
nlohmann::json to_json(const CyclotomicPolynomial& v);

}  // namespace qll
