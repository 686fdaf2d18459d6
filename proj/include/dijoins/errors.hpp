#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dijoins/types.hpp"

namespace dijoins {

// Base class for every error thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments, malformed input files, or preconditions the caller
// is responsible for (unknown ids, negative weights, self-loops, ...).
class invalid_input : public error {
 public:
  using error::error;
};

// The underlying undirected graph is not chordal. Carries a chordless cycle
// of length >= 4 as the certificate.
class not_chordal : public error {
 public:
  not_chordal(const std::string& message, std::vector<NodeId> cycle)
      : error(message), cycle_(std::move(cycle)) {}

  const std::vector<NodeId>& chordless_cycle() const noexcept { return cycle_; }

 private:
  std::vector<NodeId> cycle_;
};

// A configured bound was exceeded (dicut enumeration size, oracle budget).
class resource_limit : public error {
 public:
  using error::error;
};

// An internal invariant or a verification-mode check failed. Seeing this
// means the implementation produced an inconsistent intermediate state.
class verification_failure : public error {
 public:
  using error::error;
};

}  // namespace dijoins
