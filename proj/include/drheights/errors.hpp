#pragma once

#include <stdexcept>
#include <string>

namespace drh {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define DRH_DEFINE_ERROR(Name)                                                 \
    struct Name : Error {                                                      \
        using Error::Error;                                                    \
    }

// Field / polynomial construction.
DRH_DEFINE_ERROR(NonPrimeError);
DRH_DEFINE_ERROR(ReducibleModulusError);
DRH_DEFINE_ERROR(UnsupportedSizeError);
DRH_DEFINE_ERROR(MismatchedContextError);

// Arithmetic.
DRH_DEFINE_ERROR(DivisionByZeroError);
DRH_DEFINE_ERROR(ZeroPolynomialError);
DRH_DEFINE_ERROR(ZeroArgumentError);
DRH_DEFINE_ERROR(BothZeroError);
DRH_DEFINE_ERROR(NotNormalizableError);
DRH_DEFINE_ERROR(NotSeparableError);
DRH_DEFINE_ERROR(ConstantPolynomialError);

// Drinfeld modules and kernels.
DRH_DEFINE_ERROR(DependentPointsError);
DRH_DEFINE_ERROR(ZeroPointError);
DRH_DEFINE_ERROR(NotStableError);
DRH_DEFINE_ERROR(StabilityViolatedError);
DRH_DEFINE_ERROR(DifferentModulesError);
DRH_DEFINE_ERROR(NotContainedError);
DRH_DEFINE_ERROR(WrongRankError);
DRH_DEFINE_ERROR(NotNormalizedError);

// Heights and places.
DRH_DEFINE_ERROR(InfinitePlaceError);
DRH_DEFINE_ERROR(UnsupportedPlaceError);
DRH_DEFINE_ERROR(NonIrreduciblePlaceError);

// Lattices.
DRH_DEFINE_ERROR(RankMismatchError);
DRH_DEFINE_ERROR(SingularMatrixError);

#undef DRH_DEFINE_ERROR

/// Parse error with a 1-based source position.
struct SyntaxError : Error {
    int line;
    int col;
    SyntaxError(int line_, int col_, const std::string& what_)
        : Error("syntax error at " + std::to_string(line_) + ":" +
                std::to_string(col_) + ": " + what_),
          line(line_), col(col_) {}
};

}  // namespace drh
