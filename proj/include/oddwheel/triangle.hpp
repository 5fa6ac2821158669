#pragma once

#include <optional>

#include "oddwheel/numeric.hpp"
#include "oddwheel/surd.hpp"

namespace oddwheel {

// Triangle with positive integer side lengths.  Side `a` is the one opposite
// the measured angle; `b` and `c` are the sides enclosing it.  Degenerate
// (collinear) triangles are allowed; impossible side triples are rejected
// with ValidationError.
struct IntTriangle {
    Int a;
    Int b;
    Int c;

    IntTriangle(Int a_, Int b_, Int c_);

    bool is_degenerate() const;
};

// Cosine of the angle opposite side a: (b^2 + c^2 - a^2) / (2bc).
Rat triangle_cos(const IntTriangle& t);

// Sine of that angle, non-negative branch: sqrt(disc) / (2bc) where
// disc = 4*b^2*c^2 - (b^2 + c^2 - a^2)^2.
MultiSurd triangle_sin(const IntTriangle& t);

// Rotation by the angle opposite side a (sine taken non-negative).
Rotation triangle_rotation(const IntTriangle& t);

// Exact area, sqrt(disc) / 4.
MultiSurd triangle_area(const IntTriangle& t);

// disc = 4*b^2*c^2 - (b^2 + c^2 - a^2)^2 = 16 * area^2.  Non-negative for
// every valid side triple; zero exactly for degenerate triangles.
Int triangle_discriminant(const IntTriangle& t);

// Square-free part of the discriminant; disengaged for degenerate triangles.
// Triangles sharing a characteristic D have sines that are rational
// multiples of sqrt(D).
std::optional<Int> characteristic(const IntTriangle& t);

// Residue class mod 8 attached to an angle; always one of {1, 2, 3, 5, 6, 7}.
class AngleClass {
public:
    explicit AngleClass(int value);

    int value() const { return value_; }
    bool is_odd() const { return value_ % 2 == 1; }

    bool operator==(const AngleClass& other) const { return value_ == other.value_; }
    bool operator!=(const AngleClass& other) const { return value_ != other.value_; }

private:
    int value_;
};

// Class of an angle with rational cosine a/b (reduced): the residue
// 2*a*b^{-1} mod 8.  For odd b the inverse of b mod 8 is b itself; for
// b == 2 mod 4 the residue is a*(b/2) mod 8.  Throws NoClassError when the
// residue does not exist (cosine 0, denominator divisible by 4) or falls in
// the excluded classes {0, 4}.
AngleClass angle_class(const Rat& cosine);

// Class of the apex angle of a triangle with odd sides s1, s2 (and an odd
// third side): reduces to s1*s2 mod 8 because odd squares are 1 mod 8.
AngleClass odd_triangle_class(const Int& s1, const Int& s2);

}  // namespace oddwheel
