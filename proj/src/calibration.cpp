#include "vaxalloc/calibration.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <string_view>

namespace vaxalloc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::size_t row, const char* field) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ParseError(row, field, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

bool is_country_code(std::string_view code) {
  return code.size() == 2 && code[0] >= 'A' && code[0] <= 'Z' && code[1] >= 'A' && code[1] <= 'Z';
}

}  // namespace

ParseError::ParseError(std::size_t row, std::string field, const std::string& what)
    : std::runtime_error("row " + std::to_string(row) + ", field '" + field + "': " + what),
      row_(row),
      field_(std::move(field)) {}

void validate(const CountryRecord& r) {
  if (!is_country_code(r.country_code)) {
    throw InvalidInput("country code must be two uppercase letters: '" + r.country_code + "'");
  }
  if (!std::isfinite(r.employment_total) || r.employment_total <= 0.0) {
    throw InvalidInput("employment must be positive for " + r.country_code);
  }
  if (!std::isfinite(r.telework_share) || r.telework_share <= 0.0 || r.telework_share >= 1.0) {
    throw InvalidInput("telework share must lie in (0, 1) for " + r.country_code);
  }
}

std::vector<CountryRecord> parse_countries(std::istream& source) {
  std::vector<CountryRecord> records;
  std::set<std::string> seen;
  std::string line;
  std::size_t row = 0;
  bool header_seen = false;

  while (std::getline(source, line)) {
    ++row;
    std::string_view view = line;
    if (row == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    view = trim(view);
    if (view.empty()) continue;

    if (!header_seen) {
      if (view != kCountryHeader) {
        throw ParseError(row, "header", "expected '" + std::string(kCountryHeader) + "'");
      }
      header_seen = true;
      continue;
    }

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = view.find(',', start);
      fields.push_back(trim(view.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 3) {
      throw ParseError(row, "row", "expected 3 fields, found " + std::to_string(fields.size()));
    }

    CountryRecord rec;
    rec.country_code = std::string(fields[0]);
    if (!is_country_code(rec.country_code)) {
      throw ParseError(row, "country", "expected two uppercase letters, got '" + rec.country_code + "'");
    }
    rec.employment_total = parse_number(fields[1], row, "employment");
    if (rec.employment_total <= 0.0) throw ParseError(row, "employment", "must be positive");
    rec.telework_share = parse_number(fields[2], row, "telework_share");
    if (rec.telework_share <= 0.0 || rec.telework_share >= 1.0) {
      throw ParseError(row, "telework_share", "must lie strictly between 0 and 1");
    }
    if (!seen.insert(rec.country_code).second) {
      throw ParseError(row, "country", "duplicate country code " + rec.country_code);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<CountryRecord> load_countries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "file", "cannot open " + path);
  return parse_countries(in);
}

EconomyProfile calibrate(const CountryRecord& record, double gamma) {
  validate(record);
  if (!std::isfinite(gamma) || gamma <= 0.0 || gamma > 1.0) {
    throw InvalidInput("gamma must lie in (0, 1]");
  }
  EconomyProfile p;
  // The second subtraction is exact, so L_w + L_b reproduces the total bit for bit.
  p.labor_white = record.telework_share * record.employment_total;
  p.labor_blue = record.employment_total - p.labor_white;
  p.labor_white = record.employment_total - p.labor_blue;
  p.alpha_white = 1.0;
  p.alpha_blue = p.labor_white / p.labor_blue;
  p.gamma = gamma;
  return p;
}

}  // namespace vaxalloc
