#include "charsub/text_format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "charsub/errors.hpp"

namespace charsub {

namespace {

// Next line that is neither blank nor a comment; false at end of input.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::string at(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

Gf2Matrix parse_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError("empty input, expected header");

  std::istringstream header(line);
  long long rows = -1;
  long long cols = -1;
  std::string extra;
  if (!(header >> rows >> cols) || (header >> extra) || rows < 0 || cols < 0) {
    throw ParseError(at(line_no) + "expected header \"<n_rows> <n_cols>\"");
  }

  std::vector<Gf2Vector> out;
  out.reserve(static_cast<std::size_t>(rows));
  for (long long r = 0; r < rows; ++r) {
    if (!next_content_line(in, line, line_no)) {
      throw ParseError("expected " + std::to_string(rows) + " rows, found " + std::to_string(r));
    }
    std::istringstream row_in(line);
    Gf2Vector v(static_cast<std::size_t>(cols));
    std::string tok;
    long long c = 0;
    while (row_in >> tok) {
      if (c >= cols) throw ParseError(at(line_no) + "too many entries");
      if (tok == "1") {
        v.set(static_cast<std::size_t>(c));
      } else if (tok != "0") {
        throw ParseError(at(line_no) + "entry \"" + tok + "\" is not 0 or 1");
      }
      ++c;
    }
    if (c != cols) {
      throw ParseError(at(line_no) + "expected " + std::to_string(cols) + " entries, found " +
                       std::to_string(c));
    }
    out.push_back(std::move(v));
  }
  if (next_content_line(in, line, line_no)) throw ParseError(at(line_no) + "trailing content");
  return Gf2Matrix::from_rows(static_cast<std::size_t>(cols), std::move(out));
}

Gf2Matrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

Gf2Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_matrix(in);
}

Subspace parse_subspace(std::istream& in) {
  const Gf2Matrix m = parse_matrix(in);
  return row_space(m);
}

Subspace parse_subspace(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_subspace(in);
}

Subspace read_subspace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_subspace(in);
}

std::string format_matrix(const Gf2Matrix& m) {
  std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (const auto& r : m.row_vectors()) s += r.to_string() + "\n";
  return s;
}

std::string format_subspace(const Subspace& s) { return format_matrix(s.as_matrix()); }

}  // namespace charsub
