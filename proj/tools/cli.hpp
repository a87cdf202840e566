#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace namecalc::cli {

/// Exit codes: 0 valid or accepted, 1 invalid or rejected, 2 usage, parse or guard error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace namecalc::cli
