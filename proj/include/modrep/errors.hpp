#pragma once

#include <stdexcept>
#include <string>

namespace modrep {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define MODREP_ERROR_TYPE(Name)                 \
  class Name : public Error {                   \
   public:                                      \
    explicit Name(const std::string& what)      \
        : Error(std::string(#Name ": ") + what) {} \
  }

MODREP_ERROR_TYPE(NonIrreducibleModulus);
MODREP_ERROR_TYPE(NoGeneratorFound);
MODREP_ERROR_TYPE(ZeroElement);
MODREP_ERROR_TYPE(ExtensionTooLarge);
MODREP_ERROR_TYPE(CapExceeded);
MODREP_ERROR_TYPE(NotInvertible);
MODREP_ERROR_TYPE(NotAHomomorphism);
MODREP_ERROR_TYPE(TargetMismatch);
MODREP_ERROR_TYPE(NotAnAction);
MODREP_ERROR_TYPE(GroupMismatch);
MODREP_ERROR_TYPE(FieldMismatch);
MODREP_ERROR_TYPE(RetryBudgetExceeded);
MODREP_ERROR_TYPE(NoSuitablePrime);
MODREP_ERROR_TYPE(VerificationFailed);
MODREP_ERROR_TYPE(NotPRegular);
MODREP_ERROR_TYPE(NoSolution);
MODREP_ERROR_TYPE(SingularBasis);
MODREP_ERROR_TYPE(NonIntegralEntry);
MODREP_ERROR_TYPE(NegativeEntry);
MODREP_ERROR_TYPE(InvariantViolation);
MODREP_ERROR_TYPE(TagMismatch);
MODREP_ERROR_TYPE(NotWellDefined);
MODREP_ERROR_TYPE(NotUniform);
MODREP_ERROR_TYPE(DimensionMismatch);
MODREP_ERROR_TYPE(NonPGroupKernel);
MODREP_ERROR_TYPE(UsageError);

#undef MODREP_ERROR_TYPE

}  // namespace modrep
