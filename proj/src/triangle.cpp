#include "oddwheel/triangle.hpp"

#include <utility>

#include "oddwheel/errors.hpp"
#include "oddwheel/squarefree.hpp"

namespace oddwheel {

IntTriangle::IntTriangle(Int a_, Int b_, Int c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a < 1 || b < 1 || c < 1) {
        throw ValidationError("triangle sides must be positive integers, got (" + to_string(a) +
                              ", " + to_string(b) + ", " + to_string(c) + ")");
    }
    if (a > b + c || b > a + c || c > a + b) {
        throw ValidationError("side lengths (" + to_string(a) + ", " + to_string(b) + ", " +
                              to_string(c) + ") violate the triangle inequality");
    }
}

bool IntTriangle::is_degenerate() const {
    return a == b + c || b == a + c || c == a + b;
}

Rat triangle_cos(const IntTriangle& t) {
    return make_rat(t.b * t.b + t.c * t.c - t.a * t.a, 2 * t.b * t.c);
}

Int triangle_discriminant(const IntTriangle& t) {
    Int e = t.b * t.b + t.c * t.c - t.a * t.a;
    return 4 * t.b * t.b * t.c * t.c - e * e;
}

MultiSurd triangle_sin(const IntTriangle& t) {
    return MultiSurd::sqrt_of(triangle_discriminant(t)) * make_rat(1, 2 * t.b * t.c);
}

Rotation triangle_rotation(const IntTriangle& t) {
    return Rotation(MultiSurd(triangle_cos(t)), triangle_sin(t));
}

MultiSurd triangle_area(const IntTriangle& t) {
    return MultiSurd::sqrt_of(triangle_discriminant(t)) * Rat(1, 4);
}

std::optional<Int> characteristic(const IntTriangle& t) {
    Int disc = triangle_discriminant(t);
    if (disc == 0) return std::nullopt;
    return squarefree_decompose(disc).radicand;
}

AngleClass::AngleClass(int value) : value_(value) {
    if (value != 1 && value != 2 && value != 3 && value != 5 && value != 6 && value != 7) {
        throw ValidationError("angle class must lie in {1,2,3,5,6,7}, got " +
                              std::to_string(value));
    }
}

AngleClass angle_class(const Rat& cosine) {
    if (cosine > 1 || cosine < -1) {
        throw ValidationError("cosine out of range [-1, 1]: " + to_string(cosine));
    }
    if (cosine == 0) {
        throw NoClassError("no angle class: cosine is 0");
    }
    Int num = cosine.get_num();
    Int den = cosine.get_den();
    unsigned long m;
    if (mpz_odd_p(den.get_mpz_t())) {
        Int prod = 2 * num * den;
        m = mpz_fdiv_ui(prod.get_mpz_t(), 8);
    } else if (mpz_fdiv_ui(den.get_mpz_t(), 4) == 2) {
        Int prod = num * (den / 2);
        m = mpz_fdiv_ui(prod.get_mpz_t(), 8);
    } else {
        throw NoClassError("no angle class: reduced denominator of " + to_string(cosine) +
                           " is divisible by 4");
    }
    if (m == 0 || m == 4) {
        throw NoClassError("no angle class: cosine " + to_string(cosine) +
                           " yields excluded residue " + std::to_string(m));
    }
    return AngleClass(static_cast<int>(m));
}

AngleClass odd_triangle_class(const Int& s1, const Int& s2) {
    if (s1 < 1 || s2 < 1 || mpz_even_p(s1.get_mpz_t()) || mpz_even_p(s2.get_mpz_t())) {
        throw ValidationError("odd_triangle_class requires positive odd sides, got (" +
                              to_string(s1) + ", " + to_string(s2) + ")");
    }
    Int prod = s1 * s2;
    return AngleClass(static_cast<int>(mpz_fdiv_ui(prod.get_mpz_t(), 8)));
}

}  // namespace oddwheel
