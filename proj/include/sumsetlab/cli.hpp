#ifndef SUMSETLAB_CLI_HPP
#define SUMSETLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sumsetlab {

// Exit codes: 0 success, 1 assertion/verification failure, 2 usage,
// 3 resource limits.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

extern const char* kToolVersion;

}  // namespace sumsetlab

#endif
