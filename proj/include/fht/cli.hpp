#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fht {

// Command-line front end. Exit codes:
//   0  success / exact classification
//   1  identity suite failure
//   2  classification answered with bounds
//   3  unsupported profile
//   4  quadrature did not converge
//   64 usage or parse error
//   65 domain error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fht
