#include "fbc/matrix_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "fbc/errors.hpp"

namespace fbc::io {

namespace {

bool is_blank_or_comment(const std::string& line) {
  const auto p = line.find_first_not_of(" \t\r");
  return p == std::string::npos || line[p] == '#';
}

}  // namespace

GeneratorMatrix parse_matrix(std::istream& in) {
  std::string line;
  int lineno = 0;
  int k = -1;
  int n = -1;
  std::vector<std::vector<int>> rows;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    std::istringstream ss(line);
    if (k < 0) {
      std::string extra;
      if (!(ss >> k >> n) || (ss >> extra)) throw ParseError(lineno, "expected header \"k n\"");
      if (k < 1 || k > kMaxDimension) throw ParseError(lineno, "k must lie in [1, 24]");
      if (n < 1 || n > kMaxLength) throw ParseError(lineno, "n must lie in [1, 128]");
      continue;
    }
    if (static_cast<int>(rows.size()) == k) throw ParseError(lineno, "more than k rows");
    std::vector<int> row;
    std::string tok;
    while (ss >> tok) {
      if (tok != "0" && tok != "1") throw ParseError(lineno, "entry \"" + tok + "\" is not 0 or 1");
      row.push_back(tok == "1");
    }
    if (static_cast<int>(row.size()) != n) {
      throw ParseError(lineno, "expected " + std::to_string(n) + " entries, found " +
                                   std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (k < 0) throw ParseError(lineno, "missing header");
  if (static_cast<int>(rows.size()) != k) {
    throw ParseError(lineno, "expected " + std::to_string(k) + " rows, found " + std::to_string(rows.size()));
  }
  return GeneratorMatrix::from_rows(rows);
}

GeneratorMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

GeneratorMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const GeneratorMatrix& g) {
  out << g.k() << ' ' << g.n() << '\n';
  for (int i = 0; i < g.k(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      if (j) out << ' ';
      out << (g.entry(i, j) ? '1' : '0');
    }
    out << '\n';
  }
}

std::string format_matrix(const GeneratorMatrix& g) {
  std::ostringstream out;
  write_matrix(out, g);
  return out.str();
}

void write_matrix_file(const std::filesystem::path& path, const GeneratorMatrix& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_matrix(out, g);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace fbc::io
