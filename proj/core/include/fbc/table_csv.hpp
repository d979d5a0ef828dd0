#pragma once

// CSV tables of lower bounds.  Cells are integers; "-" marks a vacuous
// bound and a trailing "*" marks a value raised to the applicability floor.
// Lines starting with '#' are notes and are kept separately.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fbc/bounds.hpp"

namespace fbc::io {

struct TableCell {
  std::optional<long long> value;  // nullopt for a vacuous cell
  bool clamped = false;

  static TableCell number(long long v) { return {v, false}; }
  static TableCell from_outcome(const BoundOutcome& o);

  friend bool operator==(const TableCell&, const TableCell&) = default;
};

struct CsvTable {
  std::vector<std::string> headers;
  std::vector<std::vector<TableCell>> rows;
  std::vector<std::string> notes;  // without the leading "# "

  friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

std::string format_cell(const TableCell& c);
/// Throws ParseError on malformed cells.
TableCell parse_cell(const std::string& text, int line = 0);

void write_csv(std::ostream& out, const CsvTable& table);
std::string format_csv(const CsvTable& table);
CsvTable parse_csv(std::istream& in);
CsvTable parse_csv(const std::string& text);

/// Columns k, t, thm8, exact, construction.
CsvTable table2_csv(const std::vector<Table2Row>& rows);
/// Columns k followed by one per bound column; notes list raw/floor pairs of
/// clamped cells and the known reference discrepancies.
CsvTable table3_csv(const std::vector<Table3Row>& rows, const std::vector<Table3Column>& columns);

}  // namespace fbc::io
