#pragma once

// Subcommand bodies of the weilbound CLI. Each builds a RecordTable and
// renders it in the requested format; argument parsing lives in main.

#include "weilbound/records.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weilbound::cli {

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& s);
std::string render(const RecordTable& t, Format f);

/// "a..b" or "a"; throws std::invalid_argument on malformed input.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s);

/// Validates that q is a prime power; throws std::invalid_argument otherwise.
double checked_field_size(std::uint64_t q);

struct BoundArgs {
  std::uint64_t q = 0;
  std::int64_t g = 0;
  int max_order = 12;
  double tol = 1e-13;
  bool verbose = false;
};
RecordTable cmd_bound(const BoundArgs& a);

struct TableArgs {
  std::vector<std::uint64_t> qs;
  std::int64_t g_min = 1;
  std::int64_t g_max = 1;
  int max_order = 12;
  double tol = 1e-13;
  bool verbose = false;
};
RecordTable cmd_table(const TableArgs& a);
/// The table in the two-column-per-genus layout "bound(order)".
std::string render_table_grid(const RecordTable& t);

RecordTable cmd_threshold(std::uint64_t q, int n, double tol);
RecordTable cmd_asymptotic(std::uint64_t q, int max_order, double tol);
RecordTable cmd_defect(double q, const std::vector<double>& betas, int m);
RecordTable cmd_relative(std::uint64_t q, double g_x, double g_y, std::optional<double> dn1);
RecordTable cmd_fiber(std::uint64_t q, double g_x, double g_y1, double g_y2, double g_z);
RecordTable cmd_audit(std::uint64_t q, std::int64_t g, const std::vector<std::int64_t>& counts);
RecordTable cmd_plotdata(std::uint64_t q, std::int64_t g_min, std::int64_t g_max, const std::vector<int>& orders,
                         double tol);

}  // namespace weilbound::cli
