#pragma once

#include <stdexcept>
#include <string>

namespace dce {

/// Input outside the domain of a physical formula (non-positive frequency,
/// invalid mode index, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical analysis could not produce a result (short trace, bad energies).
class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dce
