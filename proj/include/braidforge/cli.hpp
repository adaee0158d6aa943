#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braidforge::cli {

inline constexpr const char* kVersion = "0.1.0";

enum Exit { Ok = 0, Rejected = 1, Usage = 2, Internal = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidforge::cli
