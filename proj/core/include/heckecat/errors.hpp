/*
  errors.hpp — exception hierarchy for heckecat.

  Every failure mode gets its own type so callers and tests can discriminate
  without matching message strings.
*/
#pragma once

#include <stdexcept>

namespace heckecat {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coxeter-group construction and element handling.
struct UnsupportedType : Error { using Error::Error; };
struct GroupTooLarge : Error { using Error::Error; };
struct BadGeneratorIndex : Error { using Error::Error; };
struct BadElement : Error { using Error::Error; };
struct GroupMismatch : Error { using Error::Error; };

// Laurent-polynomial arithmetic.
struct CoefficientOverflow : Error { using Error::Error; };
struct NegativeQExponent : Error { using Error::Error; };

// Hecke-algebra / Kazhdan-Lusztig layer.  TriangularityViolation and
// Inconsistency signal internal consistency failures: a computed basis
// element breaks its defining triangularity, or two independent routes to
// the same value disagree.
struct TriangularityViolation : Error { using Error::Error; };
struct Inconsistency : Error { using Error::Error; };

// K-group layer.
struct MissingCache : Error { using Error::Error; };
struct WrongBasis : Error { using Error::Error; };

// Functor actions.
struct SFinite : Error { using Error::Error; };
struct NotRightDescent : Error { using Error::Error; };
struct NotAscent : Error { using Error::Error; };
struct NegativeInputCoefficient : Error { using Error::Error; };
struct UngradedNegativity : Error { using Error::Error; };

// Oracles.
struct NoSolution : Error { using Error::Error; };
struct TooLong : Error { using Error::Error; };

// Serialization and text parsing.
struct CacheValidationError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace heckecat
