#pragma once

#include "polya/bigrational.hpp"
#include "polya/real.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cli {

enum class Format { csv, json };

struct Cell {
  enum class Type { exact, real, text, boolean, empty };
  Type type = Type::empty;
  std::string text;
};

Cell exact(const polya::BigInt& v);
Cell exact(const polya::BigRational& v);
Cell exact(long v);
Cell real(const polya::Real& v, int bits);
Cell text(std::string s);
Cell flag(bool b);
Cell empty();

using Row = std::vector<Cell>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<Row> rows;
  std::vector<std::pair<std::string, Cell>> summary;
};

// CSV: header + rows on `out`, summary as key=value lines on `diag`.
// JSON: one document with columns, rows and summary; exact values are decimal
// strings, reals are {"value": "...", "bits": N}.
void write_table(const Table& t, Format f, int bits, std::ostream& out, std::ostream& diag);

}  // namespace cli
