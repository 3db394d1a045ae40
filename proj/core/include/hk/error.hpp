#pragma once

#include <stdexcept>
#include <string>

namespace hk {

// Base for all contract violations raised by the library. `kind()` is the
// stable machine-readable name; the what() string carries the offending
// values.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define HK_ERROR_KIND(Name)                           \
    struct Name : Error {                             \
        explicit Name(const std::string& what = "")   \
            : Error(#Name, what) {}                   \
    }

HK_ERROR_KIND(DimensionMismatch);
HK_ERROR_KIND(DegenerateForm);
HK_ERROR_KIND(ZeroVector);
HK_ERROR_KIND(NonPositivePolarization);
HK_ERROR_KIND(NotIsotropic);
HK_ERROR_KIND(GeneratorNotIsometry);
HK_ERROR_KIND(GeneratorMovesPolarization);
HK_ERROR_KIND(NotIsometry);
HK_ERROR_KIND(OddNorm);
HK_ERROR_KIND(PreconditionViolated);
HK_ERROR_KIND(NotUnipotent);
HK_ERROR_KIND(NotNilpotent);
HK_ERROR_KIND(IndexTooHigh);
HK_ERROR_KIND(RankTooSmall);
HK_ERROR_KIND(WrongJordanProfile);
HK_ERROR_KIND(DependentInputs);
HK_ERROR_KIND(SpanNotStabilized);
HK_ERROR_KIND(WrongSignature);
HK_ERROR_KIND(NotPeriodPoint);
HK_ERROR_KIND(BadMarking);
HK_ERROR_KIND(DegreeTooLarge);
HK_ERROR_KIND(OracleIncomplete);
HK_ERROR_KIND(TruncationViolated);
HK_ERROR_KIND(DimensionTooLarge);
HK_ERROR_KIND(UnknownFixture);
HK_ERROR_KIND(ValidationFailed);
HK_ERROR_KIND(UnknownCommand);
HK_ERROR_KIND(MalformedInput);

#undef HK_ERROR_KIND

}  // namespace hk
