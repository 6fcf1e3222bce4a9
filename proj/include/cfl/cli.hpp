#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "cfl/classical.hpp"
#include "cfl/set_file.hpp"
#include "cfl/weight.hpp"

namespace cfl::cli {

// Process exit codes.
enum Exit : int {
    kOk = 0,
    kNotALaw = 1,  // contingent formula, or set expression that is no law
    kSyntax = 2,
    kCap = 3,
    kBinding = 4,
    kRange = 5,
};

struct Session {
    SetLibrary library;
    std::size_t max_atoms = kDefaultAtomCap;
    std::size_t max_symbolic = kDefaultSymbolicCap;
};

// Runs one `cfl` invocation. `args` excludes the program name. Results go to
// `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfl::cli
