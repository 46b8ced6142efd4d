#pragma once

#include <stdexcept>
#include <string>

namespace knotlattice {

// Base class for all library errors.  `code()` is the stable machine-readable
// name used in CLI error JSON; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define KNOTLATTICE_ERROR(NAME)                                        \
    class NAME : public Error {                                        \
    public:                                                            \
        explicit NAME(const std::string& msg) : Error(#NAME, msg) {}   \
    }

KNOTLATTICE_ERROR(MalformedPd);
KNOTLATTICE_ERROR(ArcMultiplicity);
KNOTLATTICE_ERROR(NonPlanar);
KNOTLATTICE_ERROR(InconsistentOrientation);
KNOTLATTICE_ERROR(MalformedGauss);
KNOTLATTICE_ERROR(UnrealizableCode);
KNOTLATTICE_ERROR(UnsignedCode);
KNOTLATTICE_ERROR(NoAllBColoring);
KNOTLATTICE_ERROR(NotConnected);
KNOTLATTICE_ERROR(NotOriented);
KNOTLATTICE_ERROR(HasBridge);
KNOTLATTICE_ERROR(NotPositiveDefinite);
KNOTLATTICE_ERROR(NotACycle);
KNOTLATTICE_ERROR(NotInLattice);
KNOTLATTICE_ERROR(BoundExceeded);
KNOTLATTICE_ERROR(NotAlternating);
KNOTLATTICE_ERROR(PreconditionFailed);
KNOTLATTICE_ERROR(InternalConventionError);
KNOTLATTICE_ERROR(FileNotFound);
KNOTLATTICE_ERROR(MalformedCorpus);

#undef KNOTLATTICE_ERROR

} // namespace knotlattice
