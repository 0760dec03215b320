// Command-line front end. run_command is the whole CLI behind a testable
// interface; the binary in tools/ is a thin argv wrapper.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tpgic {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;   // parse or validation failure
inline constexpr int kExitWrongClass = 3;     // class precondition failure

// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace tpgic
