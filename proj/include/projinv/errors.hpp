// Error types shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace projinv {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A point is mapped to (or lies on) the line at infinity: |s| below threshold.
class PointAtInfinity : public Error {
public:
    explicit PointAtInfinity(int index = -1)
        : Error(index >= 0 ? "point " + std::to_string(index) + " maps to infinity (s ~ 0)"
                           : "point maps to infinity (s ~ 0)"),
          index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

/// A determinant or denominator required to be nonzero vanished; carries its name.
class DegenerateConfiguration : public Error {
public:
    explicit DegenerateConfiguration(const std::string& which)
        : Error("degenerate configuration: " + which + " ~ 0"), which_(which) {}
    const std::string& which() const { return which_; }

private:
    std::string which_;
};

/// Bad cochain/delta index arguments (duplicate or out of range).
class IndexError : public Error {
public:
    explicit IndexError(const std::string& what) : Error(what) {}
};

/// The frame normalization system is rank-deficient beyond tolerance.
class SingularSystem : public Error {
public:
    explicit SingularSystem(const std::string& what = "linear system is singular") : Error(what) {}
};

/// Frame construction failed on a degenerate configuration.
class FrameSolveFailure : public Error {
public:
    explicit FrameSolveFailure(const std::string& what) : Error(what) {}
};

/// A gauge factor or cochain evaluated to zero where a nonzero value is required.
class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "cochain evaluated to zero") : Error(what) {}
};

/// Coboundary operators are implemented for arity <= 3 only.
class UnsupportedArity : public Error {
public:
    explicit UnsupportedArity(int arity)
        : Error("coboundary not implemented for arity " + std::to_string(arity)) {}
};

/// Non-integer weight applied to a negative invariantized Jacobian.
class FractionalPowerOfNegative : public Error {
public:
    FractionalPowerOfNegative() : Error("fractional weight requires a positive invariantized Jacobian") {}
};

/// Input file could not be parsed; carries the byte offset of the failure.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : Error(what + " (byte " + std::to_string(byte_offset) + ")"), offset_(byte_offset) {}
    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

class UnsupportedFormat : public Error {
public:
    explicit UnsupportedFormat(const std::string& what) : Error(what) {}
};

/// The warp would move the line s = 0 through the image support.
class HorizonCrossesSupport : public Error {
public:
    HorizonCrossesSupport() : Error("homography horizon crosses the image support") {}
};

/// Too many Monte-Carlo tuples were rejected as near-degenerate.
class InsufficientAcceptance : public Error {
public:
    explicit InsufficientAcceptance(double fraction)
        : Error("accepted fraction " + std::to_string(fraction) + " < 0.5"), fraction_(fraction) {}
    double fraction() const { return fraction_; }

private:
    double fraction_;
};

/// A user-supplied function failed to evaluate.
class EvaluationError : public Error {
public:
    explicit EvaluationError(const std::string& what) : Error(what) {}
};

}  // namespace projinv
