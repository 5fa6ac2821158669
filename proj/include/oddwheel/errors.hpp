#pragma once

#include <stdexcept>
#include <string>

namespace oddwheel {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected input: malformed documents, non-positive side lengths, triangle
// inequality violations, parity preconditions, and the like.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A rational cosine that does not yield an angle class: zero cosine, a
// reduced denominator divisible by 4, or a residue outside {1,2,3,5,6,7}.
class NoClassError : public Error {
public:
    using Error::Error;
};

// The crossing-edge graph admits no two-coloring compatible with the
// internal edges.
class NotBipartiteError : public Error {
public:
    using Error::Error;
};

// A class trail cannot be extended: some partial angle sum has no rational
// cosine (or no class). Happens when earlier residual groups do not complete
// to multiples of pi, i.e. the wheel does not close with all-plus signs.
class TrailError : public Error {
public:
    using Error::Error;
};

// A node or wall-clock budget was exhausted. Carries a resumable cursor,
// serialized as JSON by the caller-facing layers.
class LimitError : public Error {
public:
    LimitError(const std::string& msg, std::string cursor)
        : Error(msg), cursor_(std::move(cursor)) {}
    const std::string& cursor() const { return cursor_; }

private:
    std::string cursor_;
};

// A computed fact contradicts an invariant the library is entitled to rely
// on (e.g. a closed wheel whose residual groups do not reduce to multiples
// of pi). These are not recoverable by the caller.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// Specialization of InvariantViolation raised when a residual group of a
// genuinely closed wheel fails to compose to a multiple of pi.  Carries the
// offending residual and the group's exact composed rotation, rendered as
// strings so this header stays free of arithmetic dependencies.
class ResidualSumViolation : public InvariantViolation {
public:
    ResidualSumViolation(const std::string& msg, std::string residual, std::string rotation)
        : InvariantViolation(msg),
          residual_(std::move(residual)),
          rotation_(std::move(rotation)) {}

    const std::string& residual() const { return residual_; }
    const std::string& rotation() const { return rotation_; }

private:
    std::string residual_;
    std::string rotation_;
};

}  // namespace oddwheel
