#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oddwheel/numeric.hpp"

namespace oddwheel {

// Outcome of a finite verification sweep.  `violations` lists every
// counterexample found (expected empty), in a deterministic order that does
// not depend on the execution policy.
struct SweepResult {
    unsigned long long cases_checked = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    bool operator==(const SweepResult& other) const = default;
};

// Checks that every valid triangle with all-odd sides <= bound has a
// characteristic congruent to 3 mod 8.  Enumerates ordered triples.
SweepResult odd_characteristic_sweep(int bound, ExecutionPolicy policy);

// Checks that for every valid triangle with all-odd sides <= bound, the
// class computed from the exact cosine equals the product of the enclosing
// sides mod 8.
SweepResult class_shortcut_sweep(int bound, ExecutionPolicy policy);

// Checks, for each odd n in n_values, that every wheel with all-odd spokes
// and rims <= max_len admits no closing sign vector (exhaustive search) and
// that certification yields a parity contradiction.
SweepResult odd_wheel_sweep(const std::vector<std::size_t>& n_values, int max_len,
                            ExecutionPolicy policy);

}  // namespace oddwheel
