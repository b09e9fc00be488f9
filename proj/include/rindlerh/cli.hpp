#pragma once

#include <string>
#include <vector>

namespace rindlerh {

// Runs one CLI invocation. Returns 0 on success, 2 on validation/domain
// errors, 64 on unknown flags or bad usage.
int run_cli(const std::vector<std::string>& args);

}  // namespace rindlerh
