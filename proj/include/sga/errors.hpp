#pragma once

#include <stdexcept>
#include <string>

namespace sga {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Two grid functions that must live on the same grid do not.
class GridMismatch : public std::invalid_argument {
public:
    explicit GridMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A ladder operation stepped below the representation floor and annihilated its input.
class EmptyResult : public std::runtime_error {
public:
    explicit EmptyResult(const std::string& msg) : std::runtime_error(msg) {}
};

/// An iterative solver missed its accuracy contract; carries the index of the failing pair.
class ConvergenceFailure : public std::runtime_error {
public:
    ConvergenceFailure(const std::string& msg, int index)
        : std::runtime_error(msg + " (index " + std::to_string(index) + ")"), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

/// The supplied data cannot support the requested fit (constant, underflowed, or non-finite).
class DegenerateData : public std::runtime_error {
public:
    explicit DegenerateData(const std::string& msg) : std::runtime_error(msg) {}
};

/// Too few samples for the requested quadrature or fit.
class TooFewSamples : public std::invalid_argument {
public:
    explicit TooFewSamples(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace sga
