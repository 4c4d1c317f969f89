#include "zguess/bfile.hpp"

#include <sstream>

namespace zguess {

BFile parse_bfile(std::string_view text) {
  BFile out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  long expected = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    std::string index_tok, value_tok, extra;
    fields >> index_tok >> value_tok;
    if (value_tok.empty() || (fields >> extra)) {
      throw BFileError("b-file line " + std::to_string(lineno) + ": expected \"<index> <value>\"", lineno);
    }
    Int index, value;
    try {
      index = parse_int(index_tok);
      value = parse_int(value_tok);
    } catch (const std::invalid_argument&) {
      throw BFileError("b-file line " + std::to_string(lineno) + ": not an integer pair", lineno);
    }
    if (!index.fits_slong_p()) throw BFileError("b-file line " + std::to_string(lineno) + ": index out of range", lineno);
    const long i = index.get_si();
    if (first) {
      out.offset = i;
      first = false;
    } else if (i != expected) {
      throw BFileError("b-file line " + std::to_string(lineno) + ": expected index " +
                           std::to_string(expected) + ", found " + std::to_string(i),
                       lineno);
    }
    expected = i + 1;
    out.terms.push_back(std::move(value));
  }
  if (first) throw BFileError("b-file: no terms", lineno);
  return out;
}

std::string format_bfile(const BFile& b) {
  std::string s;
  for (std::size_t i = 0; i < b.terms.size(); ++i) {
    s += std::to_string(b.offset + static_cast<long>(i)) + ' ' + b.terms[i].get_str() + '\n';
  }
  return s;
}

}  // namespace zguess
