#pragma once

#include <stdexcept>
#include <string>

namespace ilz {

/// Base class for all library errors. The CLI maps the dynamic type name
/// onto its stderr diagnostics, so every error below carries a stable name.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define ILZ_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                       \
    public:                                                           \
        explicit NAME(const std::string& what) : Error(#NAME, what) {} \
    }

ILZ_DEFINE_ERROR(NotNormalized);
ILZ_DEFINE_ERROR(TooSmall);
ILZ_DEFINE_ERROR(DimensionMismatch);
ILZ_DEFINE_ERROR(PoleAtOne);
ILZ_DEFINE_ERROR(PoleAtZero);
ILZ_DEFINE_ERROR(PoleAtD);
ILZ_DEFINE_ERROR(PoleAtNonPositiveInteger);
ILZ_DEFINE_ERROR(NotUnitCovolume);
ILZ_DEFINE_ERROR(DivergentRegion);
ILZ_DEFINE_ERROR(UnsupportedField);
ILZ_DEFINE_ERROR(InsufficientDecay);
ILZ_DEFINE_ERROR(BadSigma);
ILZ_DEFINE_ERROR(OutOfAccuracyEnvelope);
ILZ_DEFINE_ERROR(Overflow);
ILZ_DEFINE_ERROR(NoPositiveBound);

#undef ILZ_DEFINE_ERROR

}  // namespace ilz
