#ifndef ORLICZ_ERRORS_HPP
#define ORLICZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orlicz {

/// An argument lies outside the mathematical domain of an operation
/// (negative t, non-positive lambda, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed structural input: unsorted grids, misaligned functions,
/// bad indices, unparsable CSV.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative solver failed to meet its tolerance within its iteration cap.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace orlicz

#endif  // ORLICZ_ERRORS_HPP
