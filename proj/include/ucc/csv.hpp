#pragma once

#include <string>
#include <vector>

namespace ucc {

// Shortest round-trip decimal form of a double ("%.17g" semantics with
// trailing precision trimmed only when lossless). Used for every floating
// value we emit so reruns are byte-identical and parsing back is exact.
std::string fmt_double(double v);

std::string join_doubles(const std::vector<double>& values, const std::string& sep = ",");

}  // namespace ucc
