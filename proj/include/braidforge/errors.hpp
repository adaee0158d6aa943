#pragma once

#include <stdexcept>
#include <string>

namespace braidforge {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define BRAIDFORGE_ERROR(Name)                                             \
    struct Name : Error {                                                  \
        explicit Name(const std::string& m) : Error(#Name ": " + m) {}     \
        const char* kind() const noexcept override { return #Name; }       \
    }

BRAIDFORGE_ERROR(DomainError);
BRAIDFORGE_ERROR(NotPositiveBraid);
BRAIDFORGE_ERROR(NotAKnot);
BRAIDFORGE_ERROR(InternalInvariantViolation);
BRAIDFORGE_ERROR(MoveError);
BRAIDFORGE_ERROR(TraceError);
BRAIDFORGE_ERROR(UnsupportedCase);
BRAIDFORGE_ERROR(UnsupportedPresentation);
BRAIDFORGE_ERROR(WitnessError);
BRAIDFORGE_ERROR(CertError);
BRAIDFORGE_ERROR(CertGenError);
BRAIDFORGE_ERROR(OverflowError);

#undef BRAIDFORGE_ERROR

}  // namespace braidforge
