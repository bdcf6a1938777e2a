#pragma once

#include <stdexcept>
#include <string>

namespace qfhm {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define QFHM_DEFINE_ERROR(NAME)                                    \
    struct NAME : Error {                                          \
        explicit NAME(const std::string& msg) : Error(msg) {}      \
    }

QFHM_DEFINE_ERROR(DimensionMismatch);
QFHM_DEFINE_ERROR(ValidationError);
QFHM_DEFINE_ERROR(ParseError);
QFHM_DEFINE_ERROR(PoleAtPoint);
QFHM_DEFINE_ERROR(PointOutsideDomain);
QFHM_DEFINE_ERROR(DomainMismatch);
QFHM_DEFINE_ERROR(RankMismatch);
QFHM_DEFINE_ERROR(IllConditioned);
QFHM_DEFINE_ERROR(SingularBasis);
QFHM_DEFINE_ERROR(DuplicatePoints);
QFHM_DEFINE_ERROR(NotPositive);
QFHM_DEFINE_ERROR(SampleMismatch);
QFHM_DEFINE_ERROR(StepTooLarge);
QFHM_DEFINE_ERROR(StencilExitsDomain);
QFHM_DEFINE_ERROR(NonPositiveField);

#undef QFHM_DEFINE_ERROR

}  // namespace qfhm
