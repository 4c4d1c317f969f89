#pragma once

// Command-line front end. Subcommands: guess, minterms, bound, experiment,
// bruteforce, compare.

#include <iosfwd>
#include <string>
#include <vector>

#include "zguess/guesser.hpp"

namespace zguess::cli {

/// args excludes the program name. Returns the process exit status: 0 when
/// the subcommand succeeded (for guess and minterms: a recurrence was found),
/// 1 when nothing was found, 2 for usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma- or whitespace-separated terms, each an integer or "p/q".
RatVector parse_terms(const std::string& text);

/// Guess grid when no explicit order/degree is given: all (r, d) with r >= 1
/// and (r+1)(d+2) <= 3N, ordered by (r+1)(d+1), then r.
std::vector<std::pair<std::size_t, std::size_t>> default_grid(std::size_t last_index,
                                                               std::size_t max_order,
                                                               std::size_t max_degree);

}  // namespace zguess::cli
