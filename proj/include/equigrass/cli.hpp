#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equigrass {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitFailed = 2 };

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equigrass
