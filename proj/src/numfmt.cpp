#include "csem/numfmt.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace csem {

std::string format_number(double v) {
    if (std::isfinite(v) && std::fabs(v) < 9.007199254740992e15 &&
        v == std::nearbyint(v)) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
        return buf;
    }
    // Shortest representation that still round-trips.
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

std::string format_fixed3(double v) {
    // llrint under the default FE_TONEAREST mode rounds ties to even.
    long long milli = std::llrint(v * 1000.0);
    bool neg = milli < 0;
    unsigned long long m = neg ? -static_cast<unsigned long long>(milli) : milli;
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%s%llu.%03llu", neg ? "-" : "", m / 1000, m % 1000);
    return buf;
}

} // namespace csem
