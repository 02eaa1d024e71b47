#pragma once

// Instance text format: `m` followed by m whitespace-separated 0-based sigma
// entries. Everything after '#' on a line is a comment.
//
//   5
//   0 2 4 1 3

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpg/graph.hpp"

namespace mpg {

/// Reads the next instance; std::nullopt at clean end of input.
/// Throws Error{ParseError} on malformed tokens or a truncated instance, and
/// the validate() errors on a bad permutation.
std::optional<Mpg> read_instance(std::istream& in);

Mpg parse_instance(std::string_view text);
std::vector<Mpg> parse_instances(std::istream& in);

/// Canonical form: "m\ns0 s1 ... s(m-1)\n".
std::string format_instance(const Mpg& g);

namespace fixtures {
Mpg prism();
Mpg petersen();
}  // namespace fixtures

}  // namespace mpg
