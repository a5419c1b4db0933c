#pragma once

// Fixed-significant-digit rendering used by every printer in the project.

#include <cstdio>
#include <string>

namespace mqga {

inline std::string format_real(double v, int precision) {
    if (precision < 1) precision = 1;
    if (precision > 17) precision = 17;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

}  // namespace mqga
