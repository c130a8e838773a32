#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace szq::cli {

// Exit codes returned by run().
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kInadmissible = 2;

// args excludes the program name. Artifacts go to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace szq::cli
