#pragma once

// Flat key-value rows shared by the CLI machine formats.
//
// CSV: header row, comma separated, '.' decimal separator, fields quoted when
// they contain a comma, quote or line break. Doubles always carry a '.' or an
// exponent so that they read back as doubles; empty cells are null.
// JSON: {"rows": [{...}, ...]} plus optional top-level metadata.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace weilbound {

using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

struct RecordTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> meta;  // JSON only

  void add_row(std::vector<Cell> row);

  friend bool operator==(const RecordTable&, const RecordTable&) = default;
};

std::string format_cell(const Cell& c);

std::string to_csv(const RecordTable& t);
RecordTable from_csv(const std::string& text);

std::string to_json(const RecordTable& t);
RecordTable from_json(const std::string& text);

/// Aligned plain-text rendering for terminals.
std::string to_text(const RecordTable& t);

}  // namespace weilbound
