#include "ucc/popularity.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ucc/errors.hpp"

namespace ucc {

void Popularity::validate() const {
    if (q.empty()) {
        throw ConfigError("popularity: empty distribution");
    }
    double sum = 0.0;
    for (std::size_t f = 0; f < q.size(); ++f) {
        if (!(q[f] > 0.0)) {
            throw ConfigError("popularity: non-positive probability at file " +
                              std::to_string(f + 1));
        }
        sum += q[f];
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw ConfigError("popularity: probabilities sum to " + std::to_string(sum) +
                          ", expected 1");
    }
}

Popularity zipf_popularity(const ZipfParams& params) {
    if (params.F == 0) {
        throw ConfigError("zipf: catalogue size must be at least 1");
    }
    if (!(params.nu >= 0.0) || !std::isfinite(params.nu)) {
        throw ConfigError("zipf: skew exponent must be finite and non-negative");
    }
    Popularity pop;
    pop.q.resize(params.F);
    double norm = 0.0;
    for (std::size_t f = 0; f < params.F; ++f) {
        pop.q[f] = std::pow(static_cast<double>(f + 1), -params.nu);
        norm += pop.q[f];
    }
    for (double& v : pop.q) {
        v /= norm;
    }
    pop.validate();
    return pop;
}

namespace {

// Returns true when the string parses fully as a (possibly signed,
// possibly fractional) number.
bool is_numeric(const std::string& s) {
    if (s.empty()) return false;
    std::size_t pos = 0;
    try {
        (void)std::stod(s, &pos);
    } catch (const std::exception&) {
        return false;
    }
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos == s.size();
}

std::string strip(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

Popularity load_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("trace: cannot open file '" + path + "'");
    }
    struct Row {
        double count;
        std::size_t order;  // original row order, used as the tie-break
    };
    std::vector<Row> rows;
    std::string line;
    std::size_t line_no = 0;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = strip(line);
        if (trimmed.empty()) continue;
        std::size_t comma = trimmed.find(',');
        if (comma == std::string::npos) {
            throw ConfigError("trace: malformed row at line " + std::to_string(line_no) +
                              " (expected 'id,views')");
        }
        std::string count_field = strip(trimmed.substr(comma + 1));
        if (first_data_line && !is_numeric(count_field)) {
            // Header row such as "id,views".
            first_data_line = false;
            continue;
        }
        first_data_line = false;
        if (!is_numeric(count_field)) {
            throw ConfigError("trace: malformed count at line " + std::to_string(line_no));
        }
        double count = std::stod(count_field);
        if (count < 0.0) {
            throw ConfigError("trace: negative count at line " + std::to_string(line_no));
        }
        if (count == 0.0) continue;  // files never requested carry no mass
        rows.push_back(Row{count, rows.size()});
    }
    if (rows.empty()) {
        throw ConfigError("trace: no positive request counts in '" + path + "'");
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.count > b.count;
    });
    double total = 0.0;
    for (const Row& r : rows) total += r.count;
    Popularity pop;
    pop.q.resize(rows.size());
    for (std::size_t f = 0; f < rows.size(); ++f) {
        pop.q[f] = rows[f].count / total;
    }
    pop.validate();
    return pop;
}

}  // namespace ucc
