#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsfill::cli {

enum Exit : int {
    kOk = 0,
    kFailure = 1,  // selftest mismatch
    kCapsExhausted = 2,
    kUsage = 64,
    kDomain = 65,
};

// Environment variable holding the default --caps value.
inline constexpr const char* kCapsEnv = "QSFILL_CAPS";
// Fallback golden fixture when --golden is not given.
inline constexpr const char* kGoldenEnv = "QSFILL_GOLDEN";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsfill::cli
