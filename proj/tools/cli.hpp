#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pacman::cli {

// Bad flags or parameters that violate a module precondition. Exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Runs one of: field, rate, arcs, potential, expdiff. argv[0] is the
// program name.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Angles within 1e-6 of a multiple of pi/4 snap to it exactly, so typed
// decimals such as 3.1415927 select the same lattice domain as pi.
double snap_angle(double radians);

}  // namespace pacman::cli
