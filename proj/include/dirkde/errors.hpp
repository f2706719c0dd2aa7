#pragma once

#include <stdexcept>
#include <string>

namespace dirkde {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define DIRKDE_DEFINE_ERROR(Name)                                  \
    struct Name : Error {                                          \
        explicit Name(const std::string& msg) : Error(msg) {}      \
    }

DIRKDE_DEFINE_ERROR(NegativeCoordinate);
DIRKDE_DEFINE_ERROR(SumExceedsOne);
DIRKDE_DEFINE_ERROR(InvalidDelta);
DIRKDE_DEFINE_ERROR(ResolutionTooLarge);
DIRKDE_DEFINE_ERROR(NonFiniteValue);
DIRKDE_DEFINE_ERROR(DomainError);
DIRKDE_DEFINE_ERROR(PointOutsideSimplex);
DIRKDE_DEFINE_ERROR(ParamsBelowTwo);
DIRKDE_DEFINE_ERROR(PointOnBoundary);
DIRKDE_DEFINE_ERROR(DatasetTooSmall);
DIRKDE_DEFINE_ERROR(RegimeMismatch);
DIRKDE_DEFINE_ERROR(DegenerateG);
DIRKDE_DEFINE_ERROR(BoundaryDivergence);
DIRKDE_DEFINE_ERROR(DegenerateSample);
DIRKDE_DEFINE_ERROR(PreconditionViolated);
DIRKDE_DEFINE_ERROR(ParseError);
DIRKDE_DEFINE_ERROR(NegativePart);
DIRKDE_DEFINE_ERROR(EmptyFile);
DIRKDE_DEFINE_ERROR(InvalidBandwidth);
DIRKDE_DEFINE_ERROR(InvalidTarget);

#undef DIRKDE_DEFINE_ERROR

}  // namespace dirkde
