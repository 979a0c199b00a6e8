#pragma once

#include <stdexcept>
#include <string>

namespace loopgrass {

/// Bad input values: zero polynomial where nonzero required, basepoint where a
/// lattice is required, parameters out of range, failed validation of untrusted data.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An internal invariant failed (solver found no solution where theory promises one,
/// complement dimension wrong, singular matrix that must be invertible).
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// A direction has no exact unit representative over Q(i) and no substitute was supplied.
class RepresentabilityError : public DomainError {
public:
    explicit RepresentabilityError(const std::string& what) : DomainError(what) {}
};

}  // namespace loopgrass
