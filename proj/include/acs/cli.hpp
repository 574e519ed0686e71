#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "acs/core.hpp"

namespace acs {

/// Draws a uniformly random k-antichain for n <= 6 (from the full
/// enumeration) and by rejection sampling of k random subsets otherwise.
/// Deterministic for a fixed seed.
Antichain random_antichain(int n, int k, std::uint64_t seed);

/// Entry point behind the CLI binary. args excludes the program name.
/// Exit codes: 0 success, 1 contract/regime errors, 2 resource errors,
/// 64 usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace acs
