#pragma once

#include <stdexcept>
#include <string>

namespace ppart {

// Input that could not be read or parsed (CLI category PARSE).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A contract precondition was violated (CLI category PRECOND).
struct PrecondError : std::runtime_error {
  explicit PrecondError(const std::string& msg) : std::runtime_error(msg) {}
};

// The lifted affine hull is too small to bisect the requested number of sets.
struct CapacityTooSmall : PrecondError {
  CapacityTooSmall(int capacity, int wanted)
      : PrecondError("lifted affine hull dimension " +
                     std::to_string(capacity) + " < " +
                     std::to_string(wanted) + " sets"),
        capacity(capacity),
        wanted(wanted) {}
  int capacity;
  int wanted;
};

// The bisection engine ran out of restarts (CLI category SEARCH). A cut is
// guaranteed to exist, so this signals an engine limitation, not absence.
struct SearchExhausted : std::runtime_error {
  explicit SearchExhausted(double best_imbalance)
      : std::runtime_error("bisection search exhausted; best imbalance " +
                           std::to_string(best_imbalance)),
        best_imbalance(best_imbalance) {}
  double best_imbalance;
};

}  // namespace ppart
