#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "cfl/fuzzy_set.hpp"

namespace cfl {

// Universes and sets loaded from a set file.
struct SetLibrary {
    std::map<std::string, UniversePtr, std::less<>> universes;
    SetEnvironment sets;
};

// One statement per line; `#` starts a comment.
//
//   universe U: x1 x2 x3 x4 x5
//   set C1 in U: x1=0 x2=1 x3=0 x4=0 x5=0.4
//
// Every element must be assigned exactly once per set; weights are decimals
// or fractions a/b. Malformed lines throw SyntaxError (offset of the line
// start); unknown or duplicate names and missing or repeated elements throw
// BindingError; weights outside [0, 1] throw RangeError.
SetLibrary parse_set_file(std::string_view text);
SetLibrary load_set_file(const std::filesystem::path& path);

std::string render_universe_line(const Universe& u);
// `set <name> in <universe>: e1=w1 e2=w2 ...` with exact weights.
std::string render_set_line(const FuzzySet& s);

}  // namespace cfl
