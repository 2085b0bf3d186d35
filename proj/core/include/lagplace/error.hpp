#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lagplace {

enum class ErrorKind {
  kDimension,
  kSymmetry,
  kSingular,
  kPrecondition,
  kNoIntertwiner,
  kNonUnique,
  kNotSymmetricTransfer,
  kNotMinimal,
  kStructureBroken,
  kInvalidPoint,
  kBaseLocus,
  kNotHamiltonian,
  kScale,
  kDegenerateInput,
  kRank,
  kConstructionFailed,
  kFormulaViolation,
  kNotSquare,
  kUnreliableRun,
  kGeneration,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception; `kind()` lets
/// callers (and the CLI exit-code mapping) branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lagplace
