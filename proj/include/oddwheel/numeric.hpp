#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace oddwheel {

// Arbitrary-precision integers and rationals. Rationals are kept canonical
// (lowest terms, positive denominator) by construction.
using Int = mpz_class;
using Rat = mpq_class;

// How the data-parallel kernels run. `serial` is the reference
// implementation; `parallel` uses OpenMP and must produce identical results.
enum class ExecutionPolicy { serial, parallel };

// An exact point in the rational plane.
struct RationalPoint {
    Rat x;
    Rat y;

    bool operator==(const RationalPoint& o) const { return x == o.x && y == o.y; }
};

Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& q);

// n >= 0. Floor square root / exact perfect-square test.
Int isqrt(const Int& n);
bool is_perfect_square(const Int& n);

std::string to_string(const Int& n);
std::string to_string(const Rat& q);  // "p" when integral, "p/q" otherwise

double to_double(const Rat& q);

// Parses a base-10 integer / rational ("p" or "p/q"); throws ValidationError.
Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

}  // namespace oddwheel
