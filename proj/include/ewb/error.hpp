#ifndef EWB_ERROR_HPP
#define EWB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ewb {

enum class ErrorCode {
    ParseError,
    CapExceeded,
    AxiomViolation,
    NotNormal,
    NotHomomorphism,
    NotAutomorphism,
    PreconditionViolated,
    OrderMismatch,
    NotFound,
    NotPGroup,
    InconsistentStructure,
    AlphabetMismatch,
    NotPrimitive,
    NotPIntegral,
    BoundViolated,
    IntegralityViolated,
    ClaimViolated,
    IdentityViolated,
    UsageError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace ewb

#endif
