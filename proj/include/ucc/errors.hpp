#pragma once

#include <stdexcept>
#include <string>

namespace ucc {

// Exit codes used by the CLI; library errors map onto them at the boundary.
enum class ExitCode : int {
    Ok = 0,
    ConfigError = 1,
    ModelError = 2,
    ValidationFailure = 3,
};

// Invalid configuration or input data (bad file, bad key, bad value).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter set outside model validity (e.g. non-positive spectral
// coefficient at some rank). Carries the offending rank when known.
class ModelError : public std::runtime_error {
  public:
    explicit ModelError(const std::string& what, int rank = 0)
        : std::runtime_error(what), rank_(rank) {}
    int rank() const { return rank_; }

  private:
    int rank_;
};

// A bandwidth share of zero was assigned to a group that carries load;
// the resulting delay would be unbounded.
class AllocationError : public std::runtime_error {
  public:
    explicit AllocationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ucc
