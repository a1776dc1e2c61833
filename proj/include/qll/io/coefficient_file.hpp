#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "qll/lift/coefficient_source.hpp"

namespace qll {

/**
 * {"r": float, "atkin_lehner": 1 | -1, "coefficients": [[n, value], ...]}.
 * Values are JSON numbers or exact rational strings such as "-3/7".
 */
struct CoefficientFile {
  double r = 0.0;
  int atkin_lehner = 1;
  /// Keyed by the signed index n of c(n).
  std::map<std::int64_t, FileCoefficient> coefficients;
};

/// Throws ConfigError naming the offending field.
CoefficientFile parse_coefficient_file(const std::string& text);
CoefficientFile load_coefficient_file(const std::string& path);

/// Canonical form: sorted keys, coefficients in increasing n, exact values as "num/den".
std::string serialize_coefficient_file(const CoefficientFile& file);
void save_coefficient_file(const std::string& path, const CoefficientFile& file);

std::unique_ptr<FileBackedSource> make_source(const CoefficientFile& file);

}  // namespace qll
