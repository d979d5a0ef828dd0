#pragma once

// Text matrix format:
//
//   # comment lines start with '#'
//   k n
//   <k rows of n space-separated 0/1 digits>

#include <filesystem>
#include <iosfwd>
#include <string>

#include "fbc/gf2.hpp"

namespace fbc::io {

/// Throws ParseError (with the 1-based line number) on malformed input.
GeneratorMatrix parse_matrix(std::istream& in);
GeneratorMatrix parse_matrix(const std::string& text);
GeneratorMatrix read_matrix_file(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const GeneratorMatrix& g);
std::string format_matrix(const GeneratorMatrix& g);
void write_matrix_file(const std::filesystem::path& path, const GeneratorMatrix& g);

}  // namespace fbc::io
