#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matchorient::cli {

// Exit codes: 0 computed (positive verdict where one applies), 1 negative
// verdict, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matchorient::cli
