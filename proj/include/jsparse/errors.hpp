#pragma once

#include <stdexcept>
#include <string>

namespace jsparse {

// Precondition violations on mathematical domains (negative arguments,
// out-of-range orders, mismatched dimensions).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct DimensionError : DomainError {
  explicit DimensionError(const std::string& what) : DomainError(what) {}
};

// Quadrature non-convergence, bracketing failure, singular factorization.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jsparse
