#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "oddwheel/numeric.hpp"

namespace oddwheel {

// A finite set of exact rational plane points whose pairwise distances are
// all integers.  Obtain one through validate_integral, which also records
// the distance matrix.
class IntegralPointSet {
public:
    std::size_t size() const { return points_.size(); }
    const std::vector<RationalPoint>& points() const { return points_; }

    // Integer distance between points i and j (zero when i == j).
    Int distance(std::size_t i, std::size_t j) const;

    // Distances for all pairs i < j, row-major: (0,1), (0,2), ..., (n-2,n-1).
    const std::vector<Int>& distance_list() const { return dist_; }

private:
    friend IntegralPointSet validate_integral(std::vector<RationalPoint> points);
    IntegralPointSet(std::vector<RationalPoint> points, std::vector<Int> dist);

    std::vector<RationalPoint> points_;
    std::vector<Int> dist_;  // flattened upper triangle
};

// Checks >= 2 pairwise-distinct rational points whose squared pairwise
// distances are all squares of integers; a failing pair is reported with
// its indices and exact squared distance.
IntegralPointSet validate_integral(std::vector<RationalPoint> points);

// True when the three points lie on one line, decided by the exact
// coordinate determinant (twice the signed area).
bool collinear(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c);

// Characteristic shared by every non-collinear triple of the set; nullopt
// when the set is entirely collinear (no triangle exists).  Two exact
// collinearity routes — the coordinate determinant and the vanishing of the
// distance-based squared area — are compared on every triple, and each
// triple's characteristic is compared against the first one found; any
// disagreement is a broken library fact and raises InvariantViolation.
std::optional<Int> characteristic_invariance(const IntegralPointSet& ps);

}  // namespace oddwheel
