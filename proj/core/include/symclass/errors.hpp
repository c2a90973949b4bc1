#pragma once

#include <stdexcept>
#include <string>

namespace symclass {

/// Base class for all library errors; carries a stable short code that the
/// CLI maps onto exit statuses.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

#define SYMCLASS_DEFINE_ERROR(Name)                            \
    class Name : public Error {                                \
      public:                                                  \
        explicit Name(const std::string& what)                 \
            : Error(#Name, what) {}                            \
    }

SYMCLASS_DEFINE_ERROR(UnsupportedDimension);
SYMCLASS_DEFINE_ERROR(OddDimension);
SYMCLASS_DEFINE_ERROR(WrongDimension);
SYMCLASS_DEFINE_ERROR(StructureViolation);
SYMCLASS_DEFINE_ERROR(NotInSpI);
SYMCLASS_DEFINE_ERROR(SingularR);
SYMCLASS_DEFINE_ERROR(InvariantViolation);
SYMCLASS_DEFINE_ERROR(DegenerateQuotient);
SYMCLASS_DEFINE_ERROR(InconsistentRegion);
SYMCLASS_DEFINE_ERROR(DegenerateLambda);
SYMCLASS_DEFINE_ERROR(ComplexEigenvalues);
SYMCLASS_DEFINE_ERROR(NonDiagonalizable);
SYMCLASS_DEFINE_ERROR(NotOnUnitCircle);
SYMCLASS_DEFINE_ERROR(NotAnEigenvalue);
SYMCLASS_DEFINE_ERROR(NotSymplectic);
SYMCLASS_DEFINE_ERROR(NonSymmetricA);
SYMCLASS_DEFINE_ERROR(NonConvergence);
SYMCLASS_DEFINE_ERROR(OnBifurcationLocus);
SYMCLASS_DEFINE_ERROR(SparseSampling);
SYMCLASS_DEFINE_ERROR(InvalidInput);

#undef SYMCLASS_DEFINE_ERROR

}  // namespace symclass
