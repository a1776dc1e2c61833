#include "qll/io/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qll/util/errors.hpp"

namespace qll {

namespace {

int severity(Status s) {
  switch (s) {
    case Status::pass:
      return 0;
    case Status::inconclusive:
      return 1;
    case Status::fail:
      return 2;
    case Status::config_error:
      return 3;
  }
  return 3;
}

void check_witnesses(const Report& r) {
  if (r.status == Status::fail && r.witnesses.empty())
    throw std::logic_error("failing report '" + r.suite + "' carries no witness");
  for (const auto& s : r.suites) check_witnesses(s);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_text(std::ostringstream& out, const Report& r, int depth) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  out << indent << r.suite << ": " << to_string(r.status) << "\n";
  for (const auto& [k, v] : r.results.items()) out << indent << "  " << k << " = " << v.dump() << "\n";
  for (const auto& w : r.witnesses) out << indent << "  witness " << w.dump() << "\n";
  if (r.timing_seconds) out << indent << "  time " << *r.timing_seconds << " s\n";
  std::vector<const Report*> subs;
  for (const auto& s : r.suites) subs.push_back(&s);
  std::stable_sort(subs.begin(), subs.end(), [](const Report* a, const Report* b) { return a->suite < b->suite; });
  for (const auto* s : subs) emit_text(out, *s, depth + 1);
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
    case Status::config_error:
      return "config-error";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass:
      return 0;
    case Status::fail:
      return 1;
    case Status::config_error:
      return 2;
    case Status::inconclusive:
      return 3;
  }
  return 2;
}

Status worst(Status a, Status b) { return severity(a) >= severity(b) ? a : b; }

void Report::add_suite(Report sub) {
  status = worst(status, sub.status);
  if (sub.status == Status::fail) witnesses.push_back({{"suite", sub.suite}});
  suites.push_back(std::move(sub));
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw ConfigError("unknown format '" + name + "' (expected json, csv or text)");
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["suite"] = report.suite;
  j["parameters"] = report.parameters;
  j["status"] = to_string(report.status);
  j["witnesses"] = report.witnesses;
  j["results"] = report.results;
  if (report.timing_seconds) j["timing_seconds"] = *report.timing_seconds;
  if (report.table) j["table"] = {{"header", report.table->header}, {"rows", report.table->rows}};
  if (!report.suites.empty()) {
    std::vector<const Report*> subs;
    for (const auto& s : report.suites) subs.push_back(&s);
    std::stable_sort(subs.begin(), subs.end(), [](const Report* a, const Report* b) { return a->suite < b->suite; });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto* s : subs) {
      auto sj = to_json(*s);
      sj.erase("schema");
      arr.push_back(std::move(sj));
    }
    j["suites"] = std::move(arr);
  }
  return j;
}

std::string emit_report(const Report& report, Format format) {
  check_witnesses(report);
  switch (format) {
    case Format::json:
      return to_json(report).dump(2) + "\n";
    case Format::csv: {
      if (!report.table) throw ConfigError("csv output is only available for tables; '" + report.suite + "' has none");
      std::ostringstream out;
      const auto row = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
        out << "\n";
      };
      row(report.table->header);
      for (const auto& r : report.table->rows) row(r);
      return out.str();
    }
    case Format::text: {
      std::ostringstream out;
      emit_text(out, report, 0);
      return out.str();
    }
  }
  return {};
}

nlohmann::json to_json(const HurwitzQuaternion& x) { return {x[0], x[1], x[2], x[3]}; }

nlohmann::json to_json(const Rational& q) { return to_string(q); }

nlohmann::json to_json(const AlgebraicReal& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [r, c] : a.terms()) terms.push_back({r, to_string(c)});
  return {{"terms", terms}};
}

nlohmann::json to_json(const SymbolicValue& v) { return to_string(v); }

nlohmann::json to_json(const CyclotomicValue& v) { return v.to_string(); }

nlohmann::json to_json(const CyclotomicPolynomial& v) { return to_string(v); }

}  // namespace qll
