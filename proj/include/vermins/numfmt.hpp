#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace vermins {

// Structured output carries 12 significant digits.
inline std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline double round12(double v) {
    return std::strtod(fmt_real(v).c_str(), nullptr);
}

} // namespace vermins
