#pragma once

#include <stdexcept>
#include <string>

namespace origami {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Algebraic failures. These signal either a bad input or an implementation bug.
class TrivialDenominator : public Error { using Error::Error; };
class TrivialWeight : public Error { using Error::Error; };
class MovabilityViolation : public Error { using Error::Error; };
class DivergentLimit : public Error { using Error::Error; };
class PreconditionError : public Error { using Error::Error; };

// Point-dependent failures: the caller redraws a fresh point.
class PoleAtPoint : public Error { using Error::Error; };
class ZeroDenominator : public Error { using Error::Error; };

/// Raised once the retry budget for drawing a pole-free point is spent.
class EvaluationExhausted : public Error { using Error::Error; };

}  // namespace origami
