#pragma once

// OEIS b-files: one "index value" pair per line.

#include <stdexcept>
#include <string>
#include <string_view>

#include "zguess/numeric.hpp"

namespace zguess {

struct BFile {
  long offset = 0;
  IntVector terms;
};

class BFileError : public std::runtime_error {
 public:
  BFileError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Blank lines and lines starting with '#' are skipped. Throws BFileError
/// (1-based line number) for malformed lines, gaps or an empty file.
BFile parse_bfile(std::string_view text);

std::string format_bfile(const BFile& b);

}  // namespace zguess
