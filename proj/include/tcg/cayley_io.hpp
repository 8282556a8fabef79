#pragma once

#include <iosfwd>
#include <string>

#include "tcg/finite_group.hpp"

namespace tcg {

/// Reads the "cayley v1" text format:
///   line 1: "cayley v1"
///   line 2: n
///   n lines of n space-separated 0-based indices
/// Malformed input is rejected with a line/column diagnostic.
FiniteGroup read_cayley(std::istream& in, const std::string& source_name = "<stream>");
FiniteGroup read_cayley_file(const std::string& path);

std::string write_cayley(const FiniteGroup& g);
void write_cayley_file(const FiniteGroup& g, const std::string& path);

}  // namespace tcg
