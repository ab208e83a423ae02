#pragma once

#include <stdexcept>
#include <string>

namespace qgd {

/** Base class for all errors raised by the library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Malformed Hamiltonian text, bad split weights, inconsistent sizes. */
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(what) {}
};

/**
 * Post-selection mass fell below the numeric floor (1e-14). Converts a
 * numerically dead branch into a typed error instead of propagating NaNs.
 */
class PostSelectionFloor : public Error {
 public:
  explicit PostSelectionFloor(const std::string& what) : Error(what) {}
};

}  // namespace qgd
