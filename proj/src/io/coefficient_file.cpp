#include "qll/io/coefficient_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qll/number/rational.hpp"
#include "qll/util/errors.hpp"

namespace qll {

CoefficientFile parse_coefficient_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("coefficient file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("coefficient file: top level must be an object");

  CoefficientFile out;
  if (!j.contains("r") || !j["r"].is_number()) throw ConfigError("coefficient file: field 'r' missing or not a number");
  out.r = j["r"].get<double>();

  if (!j.contains("atkin_lehner") || !j["atkin_lehner"].is_number_integer())
    throw ConfigError("coefficient file: field 'atkin_lehner' missing or not an integer");
  out.atkin_lehner = j["atkin_lehner"].get<int>();
  if (out.atkin_lehner != 1 && out.atkin_lehner != -1)
    throw ConfigError("coefficient file: field 'atkin_lehner' must be 1 or -1");

  if (!j.contains("coefficients") || !j["coefficients"].is_array())
    throw ConfigError("coefficient file: field 'coefficients' missing or not an array");
  std::size_t idx = 0;
  for (const auto& entry : j["coefficients"]) {
    const std::string where = "coefficient file: field 'coefficients[" + std::to_string(idx++) + "]'";
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer())
      throw ConfigError(where + " must be [n, value] with integer n");
    const auto n = entry[0].get<std::int64_t>();
    if (n == 0) throw ConfigError(where + ": index 0 is not allowed");
    FileCoefficient c;
    if (entry[1].is_string()) {
      try {
        c.exact = parse_rational(entry[1].get<std::string>());
      } catch (const std::exception&) {
        throw ConfigError(where + ": '" + entry[1].get<std::string>() + "' is not a rational");
      }
      c.approx = to_double(*c.exact);
    } else if (entry[1].is_number()) {
      c.approx = entry[1].get<double>();
    } else {
      throw ConfigError(where + ": value must be a number or a rational string");
    }
    if (!out.coefficients.emplace(n, c).second)
      throw ConfigError("coefficient file: field 'coefficients' has duplicate index " + std::to_string(n));
  }
  return out;
}

CoefficientFile load_coefficient_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open coefficient file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_coefficient_file(buf.str());
}

std::string serialize_coefficient_file(const CoefficientFile& file) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [n, c] : file.coefficients) {
    if (c.exact)
      coeffs.push_back({n, to_string(*c.exact)});
    else
      coeffs.push_back({n, c.approx});
  }
  nlohmann::json j;
  j["r"] = file.r;
  j["atkin_lehner"] = file.atkin_lehner;
  j["coefficients"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

void save_coefficient_file(const std::string& path, const CoefficientFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write coefficient file '" + path + "'");
  out << serialize_coefficient_file(file);
}

std::unique_ptr<FileBackedSource> make_source(const CoefficientFile& file) {
  return std::make_unique<FileBackedSource>(file.r, file.atkin_lehner, file.coefficients);
}

}  // namespace qll
