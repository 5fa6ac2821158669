#pragma once

#include <map>
#include <string>

#include "oddwheel/numeric.hpp"

namespace oddwheel {

// Exact value of the form  sum_i  c_i * sqrt(D_i)  with rational c_i and
// pairwise distinct square-free integer radicands D_i >= 1.  The radicand 1
// carries the rational part.  Representation is canonical: no zero
// coefficients are stored, so equality is term-by-term map equality.
class MultiSurd {
public:
    MultiSurd() = default;
    explicit MultiSurd(const Rat& rational);
    explicit MultiSurd(const Int& integer);

    // Exact sqrt(n) for n >= 0, normalized to s*sqrt(D) with D square-free.
    static MultiSurd sqrt_of(const Int& n);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // Rational part (coefficient of radicand 1); zero if absent.
    Rat rational_part() const;
    // The exact value as a rational; throws ValidationError if irrational.
    Rat as_rational() const;

    const std::map<Int, Rat>& terms() const { return terms_; }

    MultiSurd operator-() const;
    MultiSurd& operator+=(const MultiSurd& other);
    MultiSurd& operator-=(const MultiSurd& other);
    MultiSurd& operator*=(const MultiSurd& other);
    MultiSurd& operator*=(const Rat& scale);

    friend MultiSurd operator+(MultiSurd a, const MultiSurd& b) { return a += b; }
    friend MultiSurd operator-(MultiSurd a, const MultiSurd& b) { return a -= b; }
    friend MultiSurd operator*(MultiSurd a, const MultiSurd& b) { return a *= b; }
    friend MultiSurd operator*(MultiSurd a, const Rat& s) { return a *= s; }
    friend MultiSurd operator*(const Rat& s, MultiSurd a) { return a *= s; }

    bool operator==(const MultiSurd& other) const { return terms_ == other.terms_; }
    bool operator!=(const MultiSurd& other) const { return !(*this == other); }

    // Floating approximation, for diagnostics and cross-checks only.
    double approx() const;
    // Human-readable exact form, e.g. "3/4 + 1/2*sqrt(7)".
    std::string str() const;

private:
    void add_term(const Int& radicand, const Rat& coeff);

    std::map<Int, Rat> terms_;
};

enum class RotationKind { identity, half_turn, other };

// Exact plane rotation, stored as the (cos, sin) pair of its angle.
// Invariant: cos^2 + sin^2 == 1 exactly.
class Rotation {
public:
    // Validates the unit-circle invariant; throws ValidationError on failure.
    Rotation(MultiSurd cosine, MultiSurd sine);

    static Rotation identity();

    const MultiSurd& cos() const { return cos_; }
    const MultiSurd& sin() const { return sin_; }

    // Rotation by the sum of the two angles.
    Rotation compose(const Rotation& other) const;
    // Rotation by the negated angle.
    Rotation conjugate() const;

    RotationKind classify() const;
    bool is_identity() const { return classify() == RotationKind::identity; }

    // True when the angle is an integer multiple of pi/3 (resp. pi/2).
    // On the unit circle this is a property of the cosine alone.
    bool is_pi_third_multiple() const;
    bool is_pi_half_multiple() const;

    bool operator==(const Rotation& other) const {
        return cos_ == other.cos_ && sin_ == other.sin_;
    }
    bool operator!=(const Rotation& other) const { return !(*this == other); }

private:
    struct unchecked_t {};
    Rotation(unchecked_t, MultiSurd cosine, MultiSurd sine)
        : cos_(std::move(cosine)), sin_(std::move(sine)) {}

    MultiSurd cos_;
    MultiSurd sin_;
};

}  // namespace oddwheel
