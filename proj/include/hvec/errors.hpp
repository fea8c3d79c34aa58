#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hvec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input does not satisfy the h-vector invariants (h_0 = 1, no internal zeros, ...).
class InvalidHVector : public Error {
public:
    using Error::Error;
};

/// A caller broke an operation's precondition.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// Lex-segment realization ran out of candidate monomials at `degree()`.
class NotAnOSequence : public Error {
public:
    explicit NotAnOSequence(std::size_t degree)
        : Error("NotAnOSequence(" + std::to_string(degree) + ")"), degree_(degree) {}

    std::size_t degree() const noexcept { return degree_; }

private:
    std::size_t degree_;
};

/// Brute-force search would exceed its configured subset budget.
class InfeasibleSearch : public Error {
public:
    using Error::Error;
};

/// Decomposition search requested outside codimension <= 3.
class UnsupportedCodimension : public Error {
public:
    explicit UnsupportedCodimension(long long codimension)
        : Error("UnsupportedCodimension(" + std::to_string(codimension) + ")"),
          codimension_(codimension) {}

    long long codimension() const noexcept { return codimension_; }

private:
    long long codimension_;
};

/// A proof inequality failed on a decomposition. The mathematics guarantees
/// this never happens, so it always indicates a bug or a corrupted input.
class TraceViolation : public Error {
public:
    TraceViolation(std::size_t degree, std::string label)
        : Error("TraceViolation(" + std::to_string(degree) + ", " + label + ")"),
          degree_(degree), label_(std::move(label)) {}

    std::size_t degree() const noexcept { return degree_; }
    const std::string& label() const noexcept { return label_; }

private:
    std::size_t degree_;
    std::string label_;
};

}  // namespace hvec
