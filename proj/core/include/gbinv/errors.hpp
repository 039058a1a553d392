#pragma once

#include <stdexcept>
#include <string>

namespace gbinv {

// Mathematical domain violations and numerical degeneracies (s <= 0 in the
// incomplete gamma, infinite horizon where a finite one is required,
// success probabilities below the representable floor).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Invalid model parameters: non-positive holding rate or reorder cost,
// empty sweep grids, unknown report formats, bad simulation settings.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gbinv
