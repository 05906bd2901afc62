#include "weilbound/records.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace weilbound {

namespace {

using ojson = nlohmann::ordered_json;

std::string format_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("records: non-finite double");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Unquoted CSV field: empty, boolean, integer or double.
Cell parse_bare(const std::string& s) {
  if (s.empty()) return std::monostate{};
  if (s == "true") return true;
  if (s == "false") return false;
  std::int64_t i = 0;
  auto [pi, ei] = std::from_chars(s.data(), s.data() + s.size(), i);
  if (ei == std::errc() && pi == s.data() + s.size()) return i;
  double d = 0.0;
  auto [pd, ed] = std::from_chars(s.data(), s.data() + s.size(), d);
  if (ed == std::errc() && pd == s.data() + s.size()) return d;
  throw std::invalid_argument("csv: unquoted field is not a number or boolean: " + s);
}

// Splits RFC-4180 text into records; quoted fields are flagged.
std::vector<std::vector<std::pair<std::string, bool>>> split_csv(const std::string& text) {
  std::vector<std::vector<std::pair<std::string, bool>>> records;
  std::vector<std::pair<std::string, bool>> record;
  std::string field;
  bool quoted = false;
  bool in_quotes = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    any = true;
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      in_quotes = true;
      quoted = true;
    } else if (ch == ',') {
      record.emplace_back(std::move(field), quoted);
      field.clear();
      quoted = false;
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      record.emplace_back(std::move(field), quoted);
      records.push_back(std::move(record));
      record.clear();
      field.clear();
      quoted = false;
      any = false;
    } else {
      field += ch;
    }
  }
  if (in_quotes) throw std::invalid_argument("csv: unterminated quoted field");
  if (any) {
    record.emplace_back(std::move(field), quoted);
    records.push_back(std::move(record));
  }
  return records;
}

ojson cell_to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> ojson {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) throw std::invalid_argument("records: non-finite double");
          return v;
        } else {
          return v;
        }
      },
      c);
}

Cell cell_from_json(const ojson& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw std::invalid_argument("json: unsupported cell type");
}

}  // namespace

void RecordTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("records: row width does not match columns");
  rows.push_back(std::move(row));
}

std::string format_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return v;
        }
      },
      c);
}

std::string to_csv(const RecordTable& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (const auto* s = std::get_if<std::string>(&row[i]))
        out += quote(*s);
      else
        out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

RecordTable from_csv(const std::string& text) {
  const auto records = split_csv(text);
  if (records.empty()) throw std::invalid_argument("csv: missing header");
  RecordTable t;
  for (const auto& [name, q] : records.front()) t.columns.push_back(name);
  for (std::size_t r = 1; r < records.size(); ++r) {
    std::vector<Cell> row;
    for (const auto& [field, q] : records[r]) row.push_back(q ? Cell(field) : parse_bare(field));
    t.add_row(std::move(row));
  }
  return t;
}

std::string to_json(const RecordTable& t) {
  ojson doc = ojson::object();
  for (const auto& [key, value] : t.meta) doc[key] = cell_to_json(value);
  ojson rows = ojson::array();
  for (const auto& row : t.rows) {
    ojson obj = ojson::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_to_json(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["columns"] = t.columns;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

RecordTable from_json(const std::string& text) {
  const ojson doc = ojson::parse(text);
  if (!doc.is_object() || !doc.contains("rows")) throw std::invalid_argument("json: missing rows array");
  RecordTable t;
  for (const auto& [key, value] : doc.items()) {
    if (key == "rows" || key == "columns") continue;
    t.meta.emplace_back(key, cell_from_json(value));
  }
  t.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& obj : doc.at("rows")) {
    std::vector<Cell> row;
    for (const auto& col : t.columns) row.push_back(obj.contains(col) ? cell_from_json(obj.at(col)) : Cell{});
    t.add_row(std::move(row));
  }
  return t;
}

std::string to_text(const RecordTable& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : t.rows) {
    auto& out = cells.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string s;
      if (const auto* d = std::get_if<double>(&row[i])) {
        std::ostringstream os;
        os.precision(10);
        os << *d;
        s = os.str();
      } else {
        s = format_cell(row[i]);
        if (s.empty()) s = "-";
      }
      width[i] = std::max(width[i], s.size());
      out.push_back(std::move(s));
    }
  }
  std::ostringstream os;
  for (const auto& [key, value] : t.meta) os << key << ": " << format_cell(value) << '\n';
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) os << "  ";
      os << std::string(width[i] - fields[i].size(), ' ') << fields[i];
    }
    os << '\n';
  };
  line(t.columns);
  for (const auto& row : cells) line(row);
  return os.str();
}

}  // namespace weilbound
