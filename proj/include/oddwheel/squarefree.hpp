#pragma once

#include <cstdint>

#include "oddwheel/numeric.hpp"

namespace oddwheel {

// n split as square_part^2 * radicand with the radicand square-free.
// 0 decomposes as 1^2 * 0; this is the only decomposition with radicand 0.
struct SquareFreeDecomposition {
    Int original;
    Int square_part;
    Int radicand;
};

// Factors n completely and splits the exponents. Trial division by sieved
// primes handles everything below 10^12; larger cofactors fall back to
// Brent's variant of Pollard rho with a Miller-Rabin primality test.
SquareFreeDecomposition squarefree_decompose(const Int& n);

// Native-width fast path, exposed for the enumeration kernels.
struct SquareFree64 {
    std::uint64_t square_part;
    std::uint64_t radicand;
};
SquareFree64 squarefree_decompose_u64(std::uint64_t n);

}  // namespace oddwheel
