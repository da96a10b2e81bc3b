#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vaxalloc/model.hpp"

namespace vaxalloc {

/// One row of the country table: `country,employment,telework_share`.
struct CountryRecord {
  std::string country_code;
  double employment_total = 0.0;
  double telework_share = 0.0;
};

/// Malformed country table. `row` is the 1-based line number (header is line 1).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t row, std::string field, const std::string& what);

  std::size_t row() const { return row_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t row_;
  std::string field_;
};

inline constexpr const char* kCountryHeader = "country,employment,telework_share";
inline constexpr double kDefaultGamma = 0.8;

void validate(const CountryRecord& record);

/// Reads the country table. An empty stream yields no records; otherwise the
/// first non-blank line must be the header. Row order is preserved and
/// country codes must be unique.
std::vector<CountryRecord> parse_countries(std::istream& source);
std::vector<CountryRecord> load_countries(const std::string& path);

/// Splits employment by telework share, normalizes alpha_white to one and
/// sets alpha_blue = L_w / L_b so that the pre-pandemic economy is balanced.
EconomyProfile calibrate(const CountryRecord& record, double gamma = kDefaultGamma);

}  // namespace vaxalloc
