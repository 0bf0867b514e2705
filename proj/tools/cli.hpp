#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splq::cli {

enum exit_code { ok = 0, bad_input = 2, numeric_failure = 3 };

// argv without the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splq::cli
