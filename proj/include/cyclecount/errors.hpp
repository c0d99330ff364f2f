#pragma once

#include <stdexcept>
#include <string>

namespace cyclecount {

// Invalid user-supplied parameters (bad family size, missing vertex, ...).
class parameter_error : public std::invalid_argument {
 public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// Computation refused because the input exceeds a vertex-count guard.
// Guards are expressed in vertex count, never in time.
class resource_guard_error : public std::runtime_error {
 public:
  resource_guard_error(const std::string& what, int n, int limit)
      : std::runtime_error(what + " (n=" + std::to_string(n) +
                           ", limit=" + std::to_string(limit) + ")"),
        n_(n),
        limit_(limit) {}
  int n() const { return n_; }
  int limit() const { return limit_; }

 private:
  int n_;
  int limit_;
};

// Malformed external input (graph JSON, expect files).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cyclecount
