#pragma once

#include "cli_config.hpp"

namespace qpl::cli {

enum class SelftestLevel { Fast, Full };

/// Runs the identity suite, printing one PASS/FAIL line per check.
/// Returns the number of failed checks.
int run_selftest(const Config& config, SelftestLevel level);

}  // namespace qpl::cli
