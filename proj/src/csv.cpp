#include "ucc/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace ucc {

std::string fmt_double(double v) {
    char buf[40];
    // Integral values (budgets, counts, round settings) read best undecorated.
    if (v == static_cast<double>(static_cast<long long>(v)) && std::fabs(v) < 1e15) {
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
        return std::string(buf);
    }
    // Otherwise try increasing precision until the value round-trips exactly;
    // most numbers print short, worst case is 17 significant digits.
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return std::string(buf);
}

std::string join_doubles(const std::vector<double>& values, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += fmt_double(values[i]);
    }
    return out;
}

}  // namespace ucc
