#include "oddwheel/squarefree.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "oddwheel/errors.hpp"

namespace oddwheel {
namespace {

constexpr std::uint64_t kSieveBound = 1u << 20;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kSieveBound + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint64_t p = 2; p <= kSieveBound; ++p) {
            if (composite[p]) continue;
            out.push_back(static_cast<std::uint32_t>(p));
            for (std::uint64_t q = p * p; q <= kSieveBound; q += p) {
                composite[q] = true;
            }
        }
        return out;
    }();
    return primes;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t addmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic over the full 64-bit range with this base set.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Pollard rho, Floyd cycle detection. n must be odd, composite, > 1.
std::uint64_t pollard_rho_u64(std::uint64_t n) {
    for (std::uint64_t c = 1;; ++c) {
        auto step = [&](std::uint64_t x) { return addmod_u64(mulmod_u64(x, x, n), c, n); };
        std::uint64_t x = 2, y = 2, d = 1;
        do {
            x = step(x);
            y = step(step(y));
            d = gcd_u64(x > y ? x - y : y - x, n);
        } while (d == 1);
        if (d != n) return d;
    }
}

void factor_u64(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    for (std::uint32_t p : small_primes()) {
        if (std::uint64_t(p) * p > n) break;
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (n <= kSieveBound * kSieveBound || is_prime_u64(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_rho_u64(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

Int pollard_rho_mpz(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        auto step = [&](const Int& v) { return Int((v * v + c) % n); };
        Int x = 2, y = 2, d = 1;
        do {
            x = step(x);
            y = step(step(y));
            Int diff = x > y ? Int(x - y) : Int(y - x);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (d == 1);
        if (d != n) return d;
    }
}

void factor_mpz(Int n, std::map<Int, unsigned>& out) {
    while (n != 1) {
        if (n.fits_ulong_p()) {
            std::map<std::uint64_t, unsigned> small;
            factor_u64(n.get_ui(), small);
            for (const auto& [p, e] : small) {
                Int pz;
                mpz_set_ui(pz.get_mpz_t(), static_cast<unsigned long>(p));
                out[pz] += e;
            }
            return;
        }
        for (std::uint32_t p : small_primes()) {
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                ++out[Int(p)];
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            }
            if (n.fits_ulong_p()) break;
        }
        if (n == 1 || n.fits_ulong_p()) continue;
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
            ++out[n];
            return;
        }
        if (is_perfect_square(n)) {
            std::map<Int, unsigned> root;
            factor_mpz(isqrt(n), root);
            for (const auto& [p, e] : root) out[p] += 2 * e;
            return;
        }
        Int d = pollard_rho_mpz(n);
        factor_mpz(d, out);
        n /= d;
    }
}

}  // namespace

SquareFree64 squarefree_decompose_u64(std::uint64_t n) {
    if (n == 0) return {1, 0};
    std::map<std::uint64_t, unsigned> factors;
    factor_u64(n, factors);
    std::uint64_t s = 1, d = 1;
    for (const auto& [p, e] : factors) {
        for (unsigned i = 0; i < e / 2; ++i) s *= p;
        if (e & 1) d *= p;
    }
    return {s, d};
}

SquareFreeDecomposition squarefree_decompose(const Int& n) {
    if (n < 0) {
        throw ValidationError("squarefree_decompose requires n >= 0");
    }
    if (n == 0) return {0, 1, 0};
    SquareFreeDecomposition out;
    out.original = n;
    if (n.fits_ulong_p()) {
        SquareFree64 f = squarefree_decompose_u64(n.get_ui());
        mpz_set_ui(out.square_part.get_mpz_t(), static_cast<unsigned long>(f.square_part));
        mpz_set_ui(out.radicand.get_mpz_t(), static_cast<unsigned long>(f.radicand));
        return out;
    }
    std::map<Int, unsigned> factors;
    factor_mpz(n, factors);
    Int s = 1, d = 1;
    for (const auto& [p, e] : factors) {
        for (unsigned i = 0; i < e / 2; ++i) s *= p;
        if (e & 1) d *= p;
    }
    out.square_part = s;
    out.radicand = d;
    return out;
}

}  // namespace oddwheel
