#include "dlpbench/core/errors.hpp"

namespace dlpbench {

PairFailure::PairFailure(std::size_t i, std::size_t j, const std::string& cause)
    : Error("PairFailure: pair (" + std::to_string(i) + ", " + std::to_string(j) + "): " + cause),
      row_(i),
      col_(j) {}

}  // namespace dlpbench
