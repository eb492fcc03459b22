#ifndef FSREC_CLI_HPP
#define FSREC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fsrec {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCacheDirEnv = "FSREC_CACHE_DIR";

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int usage = 2;
inline constexpr int resource_cap = 3;
} // namespace exit_code

/// Runs the command line front end. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fsrec

#endif
