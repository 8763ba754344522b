#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hammock::cli {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInput = 3;

constexpr std::size_t kDefaultStage = 7;
constexpr std::size_t kDefaultBound = 8;

/// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hammock::cli
