#pragma once

#include <stdexcept>
#include <string>

namespace frobflag {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define FROBFLAG_ERROR(Name)                                       \
    class Name : public Error {                                    \
    public:                                                        \
        using Error::Error;                                        \
        const char* kind() const noexcept override { return #Name; } \
    }

FROBFLAG_ERROR(ParseError);
FROBFLAG_ERROR(NondominantWeight);
FROBFLAG_ERROR(UnknownName);
FROBFLAG_ERROR(UnsupportedType);
FROBFLAG_ERROR(NonOrthogonalBlock);
FROBFLAG_ERROR(ConcentrationViolated);
FROBFLAG_ERROR(SingularSystem);
FROBFLAG_ERROR(MultiplicityMismatch);
FROBFLAG_ERROR(NegativeMultiplicity);
FROBFLAG_ERROR(InvalidParameter);

#undef FROBFLAG_ERROR

} // namespace frobflag
