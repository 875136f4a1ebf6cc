#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdell {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitEmpty = 2;

/// Runs one command line (without the program name). Results go to out; errors go to err
/// as a single-line JSON object {code, message}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pdell
