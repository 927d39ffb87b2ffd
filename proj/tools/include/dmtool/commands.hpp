#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dieudonne/gallery.hpp"
#include "dmtool/module_file.hpp"

namespace dmtool {

enum ExitCode : int { kPass = 0, kFailure = 1, kInputError = 2, kPrecisionExhausted = 3 };

struct CommandResult {
  int exit_code = kPass;
  Json output;
};

CommandResult cmd_validate(const dieudonne::UnitaryModule& dm);
CommandResult cmd_gallery(const dieudonne::FamilySpec& spec, std::uint64_t p,
                          std::optional<int> precision);
CommandResult cmd_report(const dieudonne::UnitaryModule& dm, std::optional<int> max_iter);
/// Both sides unless one is requested.
CommandResult cmd_chain(const dieudonne::UnitaryModule& dm, std::optional<int> side,
                        std::optional<int> max_iter);
CommandResult cmd_minheight(const dieudonne::UnitaryModule& dm, std::optional<int> max_iter);
CommandResult cmd_slope(const dieudonne::UnitaryModule& dm, std::optional<int> n_max);
/// Exit 1 when the presentations differ modulo p^k.
CommandResult cmd_compare_truncation(const dieudonne::UnitaryModule& first,
                                     const dieudonne::UnitaryModule& second, int k);
CommandResult cmd_cutoff_witness(int a, int b, std::uint64_t p, std::optional<int> precision);
/// Sweeps every signature with a + b <= bound; exit 1 if any cell fails.
CommandResult cmd_verify_paper(std::uint64_t p, int bound, std::optional<int> precision);

/// Runs the command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmtool
