#pragma once

#include <string>
#include <vector>

namespace grest::cli {

inline constexpr const char* kVersion = "0.1.0";

// exit codes: 0 success, 1 failed check, 2 input error, 3 budget error
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBudgetError = 3;

int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

}  // namespace grest::cli
