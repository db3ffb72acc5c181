#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ncg/verify.hpp"

namespace ncg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

// args excludes the program name. Subcommands: build, graph, poly, export,
// verify. Exit codes: 0 ok, 1 usage or I/O error, 2 mismatch.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const ClosedFormTable& forms = default_closed_forms());

}  // namespace ncg::cli
