#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chainsel {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kUsage = 2;
inline constexpr int kIo = 3;
inline constexpr int kValidation = 4;
inline constexpr int kNoActiveCriteria = 5;
inline constexpr int kNotFound = 6;
inline constexpr int kConflict = 7;
inline constexpr int kBaselineAmbiguous = 8;
inline constexpr int kDegenerate = 9;
}  // namespace exit_code

/// Entry point of the `chainsel` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chainsel
