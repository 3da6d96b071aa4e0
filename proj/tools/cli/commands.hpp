#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tautring::cli {

/// Bad flag values or combinations; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs one invocation. `args` excludes the program name.
/// Returns 0 on success, 1 when a mathematical precondition fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tautring::cli
