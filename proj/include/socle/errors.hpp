#pragma once

#include <stdexcept>
#include <string>

namespace socle {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrimeError : Error { using Error::Error; };
struct ReducibleError : Error { using Error::Error; };
struct UncertifiedIrreducibilityError : Error { using Error::Error; };
struct DivisionByZeroError : Error { using Error::Error; };
struct ParentMismatchError : Error { using Error::Error; };
struct ZeroDenominatorError : Error { using Error::Error; };
struct NotIrreducibleError : Error { using Error::Error; };
struct UnsupportedBaseError : Error { using Error::Error; };
struct PoleAtSubstitutionError : Error { using Error::Error; };
struct WrongCharacteristicError : Error { using Error::Error; };
struct MissingRootOfUnityError : Error { using Error::Error; };
struct UnsupportedShapeError : Error { using Error::Error; };
struct NotCertifiedError : Error { using Error::Error; };
struct NotAGroupError : Error { using Error::Error; };
struct NotASubgroupError : Error { using Error::Error; };
struct OrderBoundExceededError : Error { using Error::Error; };
struct SingularSystemError : Error { using Error::Error; };
struct InvalidRelationError : Error { using Error::Error; };
struct UnknownScenarioError : Error { using Error::Error; };
struct ParseError : Error {
  int line = 1;
  int column = 1;
  ParseError(const std::string& msg, int ln, int col)
      : Error(msg + " (line " + std::to_string(ln) + ", column " +
              std::to_string(col) + ")"),
        line(ln),
        column(col) {}
};
struct SemanticError : Error { using Error::Error; };

}  // namespace socle
