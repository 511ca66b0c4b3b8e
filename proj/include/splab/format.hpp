#pragma once

#include <cstdio>
#include <string>

namespace splab {

// Round-trip-exact decimal rendering for doubles: 17 significant digits.
inline std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace splab
