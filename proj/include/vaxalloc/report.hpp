#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace vaxalloc::report {

using Json = nlohmann::ordered_json;

// Column layouts of the emitted tables. These are stable; append only.
inline const std::vector<std::string> kSolveColumns = {
    "country", "beta_w", "beta_b", "v_over_l", "v_blue_star", "v_ratio",
    "clamp", "objective", "surplus_blue", "surplus_white"};
inline const std::vector<std::string> kFrontierColumns = {
    "country", "beta_w", "v_over_l", "beta_b", "v_ratio", "clamp"};
inline const std::vector<std::string> kSweepColumns = {
    "country", "v_over_l", "beta_w", "beta_b", "v_ratio", "clamp"};
inline const std::vector<std::string> kSummarizeColumns = {
    "country", "v_over_l", "threshold", "share_exceeding"};
inline const std::vector<std::string> kAuditColumns = {
    "country", "v_over_l", "beta_w", "beta_b", "v_blue_star", "oracle_v_blue",
    "objective", "oracle_objective", "grid_step", "agree"};
inline const std::vector<std::string> kCalibrateColumns = {
    "country", "employment", "telework_share", "labor_white", "labor_blue",
    "alpha_white", "alpha_blue", "gamma"};

/// Rows hold scalars (numbers, strings, booleans) in column order.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;

  void add_row(std::vector<Json> row);
};

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double value);

void write_csv(std::ostream& out, const Table& table);

/// {"meta": ..., "columns": [...], "rows": [{column: value, ...}, ...]}
void write_json(std::ostream& out, const Table& table, const Json& meta);

/// Reads a table written by write_csv; every cell comes back as text.
/// Throws std::runtime_error if a row's width differs from the header.
struct TextTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};
TextTable read_csv(std::istream& in);

}  // namespace vaxalloc::report
