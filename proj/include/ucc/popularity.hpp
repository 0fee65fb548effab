#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ucc {

// File request distribution: q[f] is the probability that a request targets
// file f (0-based internally, file ids are 1-based in all I/O).
struct Popularity {
    std::vector<double> q;

    std::size_t size() const { return q.size(); }
    // Throws ConfigError unless every entry is positive and the entries sum
    // to one within 1e-9.
    void validate() const;
};

struct ZipfParams {
    std::size_t F = 0;   // catalogue size, >= 1
    double nu = 1.0;     // skew exponent, >= 0 (0 means uniform)
};

// Zipf law: q_f proportional to f^(-nu), f = 1..F.
Popularity zipf_popularity(const ZipfParams& params);

// Builds a popularity distribution from a request-count trace in CSV form
// ("id,views"). Rows with zero count are dropped; files are ordered by
// descending count, ties broken by original row order. A header row is
// detected by a non-numeric count field and skipped.
Popularity load_trace(const std::string& path);

}  // namespace ucc
