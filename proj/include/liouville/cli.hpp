#pragma once

#include <iosfwd>

namespace liouville {

/// Entry point of the liouville command. Exit codes: 0 all selected checks passed,
/// 1 a check failed, 2 usage or configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace liouville
