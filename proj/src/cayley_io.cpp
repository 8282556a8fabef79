#include "tcg/cayley_io.hpp"

#include <fstream>
#include <sstream>

namespace tcg {

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, int col, const std::string& msg) {
  fail(ErrorCode::ParseError,
       source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

}  // namespace

FiniteGroup read_cayley(std::istream& in, const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line)) parse_fail(source_name, 1, 1, "empty input");
  if (line == "cayley v1\r") line.pop_back();
  if (line != "cayley v1") parse_fail(source_name, 1, 1, "expected header 'cayley v1'");

  if (!std::getline(in, line)) parse_fail(source_name, 2, 1, "missing order line");
  int n = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> n) || n < 1) parse_fail(source_name, 2, 1, "order must be a positive integer");
    std::string extra;
    if (ls >> extra) parse_fail(source_name, 2, 1, "unexpected trailing text after order");
  }

  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    if (!std::getline(in, line))
      parse_fail(source_name, 3 + row, 1, "expected " + std::to_string(n) + " table rows");
    std::istringstream ls(line);
    for (int col = 0; col < n; ++col) {
      int v;
      if (!(ls >> v))
        parse_fail(source_name, 3 + row, col + 1,
                   "expected " + std::to_string(n) + " entries in row");
      if (v < 0 || v >= n)
        parse_fail(source_name, 3 + row, col + 1, "entry " + std::to_string(v) + " out of range");
      flat.push_back(v);
    }
    std::string extra;
    if (ls >> extra) parse_fail(source_name, 3 + row, n + 1, "unexpected trailing entries in row");
  }
  return FiniteGroup::validate_flat(n, std::move(flat), source_name);
}

FiniteGroup read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  return read_cayley(in, path);
}

std::string write_cayley(const FiniteGroup& g) {
  std::ostringstream out;
  int n = g.order();
  out << "cayley v1\n" << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << '\n';
  }
  return out.str();
}

void write_cayley_file(const FiniteGroup& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << write_cayley(g);
}

}  // namespace tcg
