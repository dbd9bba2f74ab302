#pragma once

#include "cluster/seed.hpp"

#include <iosfwd>
#include <string>

namespace cluster {

// Seed file grammar (line oriented, 1-based indices, '#' comments):
//
//   seed v1
//   n 2
//   unfrozen 1 2
//   d 1 1
//   row 0 -2
//   row 2 0
//   label 1 a        # optional
//
// Entries are integers or rationals p/q (rationals legal only in the
// frozen x frozen block; the Seed constructor re-checks every invariant).
Seed parse_seed(const std::string& text);
Seed load_seed(const std::string& path);

std::string serialize_seed(const Seed& s);

// Exact rational scalar from "p" or "p/q".
Rat parse_rat(const std::string& tok);

// Comma-separated integer vector ("1,-2,3").
IntVec parse_ivec(const std::string& tok);

// Comma-separated 1-based mutation path ("1,2,1") -> 0-based vertex ids.
std::vector<int> parse_path_arg(const std::string& tok, const Seed& s);

} // namespace cluster
