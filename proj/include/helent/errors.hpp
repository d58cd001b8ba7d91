#pragma once

#include <stdexcept>
#include <string>

namespace helent {

/// A boosted momentum landed exactly at rest, so the direction needed to
/// define a helicity frame does not exist and no convention applies.
class DegenerateMomentumError : public std::runtime_error {
 public:
  explicit DegenerateMomentumError(const std::string& what)
      : std::runtime_error(what) {}
};

/// An internal cross-check failed (off-shell drift after a transform,
/// a representation element that lost its structure, ...).
class InternalConsistencyError : public std::runtime_error {
 public:
  explicit InternalConsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Eigenvalue noise above the hard threshold; the density matrix fed in
/// upstream is suspect.
class NumericalInstabilityError : public std::runtime_error {
 public:
  explicit NumericalInstabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace helent
