#include "fbc/table_csv.hpp"

#include <charconv>
#include <sstream>

#include "fbc/errors.hpp"

namespace fbc::io {

TableCell TableCell::from_outcome(const BoundOutcome& o) {
  if (o.vacuous) return {std::nullopt, false};
  return {o.min_n, o.clamped};
}

std::string format_cell(const TableCell& c) {
  if (!c.value) return "-";
  return std::to_string(*c.value) + (c.clamped ? "*" : "");
}

TableCell parse_cell(const std::string& text, int line) {
  if (text == "-") return {std::nullopt, false};
  std::string_view body = text;
  bool clamped = false;
  if (!body.empty() && body.back() == '*') {
    clamped = true;
    body.remove_suffix(1);
  }
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size()) {
    throw ParseError(line, "bad table cell \"" + text + "\"");
  }
  return {v, clamped};
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
    out.push_back(field);
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

void write_csv(std::ostream& out, const CsvTable& table) {
  for (std::size_t i = 0; i < table.headers.size(); ++i) out << (i ? "," : "") << table.headers[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
  for (const auto& note : table.notes) out << "# " << note << '\n';
}

std::string format_csv(const CsvTable& table) {
  std::ostringstream out;
  write_csv(out, table);
  return out.str();
}

CsvTable parse_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      table.notes.push_back(line.size() > 2 && line[1] == ' ' ? line.substr(2) : line.substr(1));
      continue;
    }
    auto fields = split(line);
    if (!have_header) {
      table.headers = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.headers.size()) throw ParseError(lineno, "row width does not match header");
    std::vector<TableCell> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_cell(f, lineno));
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError(lineno, "missing header row");
  return table;
}

CsvTable parse_csv(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

CsvTable table2_csv(const std::vector<Table2Row>& rows) {
  CsvTable table;
  table.headers = {"k", "t", "thm8", "exact", "construction"};
  for (const auto& r : rows) {
    table.rows.push_back({TableCell::number(r.k), TableCell::number(r.t), TableCell::from_outcome(r.thm8),
                          TableCell::number(r.exact), TableCell::number(r.construction)});
  }
  return table;
}

CsvTable table3_csv(const std::vector<Table3Row>& rows, const std::vector<Table3Column>& columns) {
  CsvTable table;
  table.headers.push_back("k");
  for (const auto& c : columns) table.headers.push_back(c.label());
  for (const auto& r : rows) {
    std::vector<TableCell> cells{TableCell::number(r.k)};
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
      const auto& o = r.cells[i];
      cells.push_back(TableCell::from_outcome(o));
      if (o.clamped || o.vacuous) {
        table.notes.push_back("k=" + std::to_string(r.k) + " " + columns[i].label() +
                              ": raw=" + std::to_string(o.raw_min_n) +
                              " floor=" + std::to_string(o.applicability_floor) +
                              (o.vacuous ? " vacuous" : " clamped"));
      }
    }
    table.rows.push_back(std::move(cells));
  }
  for (const auto& d : known_table3_discrepancies()) {
    for (const auto& r : rows) {
      if (r.k != d.k) continue;
      for (const auto& c : columns) {
        if (c.id == d.column.id && c.t == d.column.t && c.r == d.column.r) {
          table.notes.push_back("k=" + std::to_string(d.k) + " " + c.label() + ": certified " +
                                std::to_string(d.certified) + ", reference table lists " +
                                std::to_string(d.reference));
        }
      }
    }
  }
  return table;
}

}  // namespace fbc::io
