#pragma once

#include <stdexcept>
#include <string>

namespace dlpbench {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define DLPBENCH_DEFINE_ERROR(Name)                                          \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// core
DLPBENCH_DEFINE_ERROR(ConstantSeries);
DLPBENCH_DEFINE_ERROR(InvariantViolation);
DLPBENCH_DEFINE_ERROR(ParseError);
DLPBENCH_DEFINE_ERROR(LengthMismatch);
DLPBENCH_DEFINE_ERROR(EmptyInput);

// synthgen
DLPBENCH_DEFINE_ERROR(SpecOutOfBounds);
DLPBENCH_DEFINE_ERROR(InvalidScenarioParams);

// dissimilarity
DLPBENCH_DEFINE_ERROR(MissingContext);
DLPBENCH_DEFINE_ERROR(ZeroVariance);
DLPBENCH_DEFINE_ERROR(ZeroNorm);
DLPBENCH_DEFINE_ERROR(WindowTooLarge);
DLPBENCH_DEFINE_ERROR(InvalidParameter);

// representation
DLPBENCH_DEFINE_ERROR(LevelTooDeep);

// clustering
DLPBENCH_DEFINE_ERROR(ThresholdUnderflow);
DLPBENCH_DEFINE_ERROR(EigenFailure);

// stats
DLPBENCH_DEFINE_ERROR(TooFewPairs);
DLPBENCH_DEFINE_ERROR(DegenerateRanks);

// harness
DLPBENCH_DEFINE_ERROR(MissingCells);
DLPBENCH_DEFINE_ERROR(ConfigError);

#undef DLPBENCH_DEFINE_ERROR

/// Raised by pairwise_matrix when a single pair fails; carries the pair.
class PairFailure : public Error {
public:
    PairFailure(std::size_t i, std::size_t j, const std::string& cause);
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

}  // namespace dlpbench
