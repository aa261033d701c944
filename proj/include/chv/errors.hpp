#pragma once

#include <stdexcept>
#include <string>

namespace chv {

// Base class for all failures raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation requested closer to the origin than the configured floor.
struct ZeroPoint : Error {
    explicit ZeroPoint(const std::string& what) : Error(what) {}
};

// u = c + w came out non-positive, so the candidate leaves the admissible cone.
struct NonPositiveU : Error {
    explicit NonPositiveU(const std::string& what) : Error(what) {}
};

// A value landed outside its mathematically guaranteed range.
struct RangeViolation : Error {
    explicit RangeViolation(const std::string& what) : Error(what) {}
};

// An iterative scheme hit its iteration cap without meeting its tolerance.
struct NonConvergence : Error {
    explicit NonConvergence(const std::string& what) : Error(what) {}
};

// An operand left the domain of a primitive (e.g. sqrt at zero with a
// nonzero perturbation).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A statistic was requested over an empty sample set.
struct InsufficientSamples : Error {
    explicit InsufficientSamples(const std::string& what) : Error(what) {}
};

// Filesystem writes failed.
struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace chv
