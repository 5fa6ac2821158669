#include "oddwheel/pointset.hpp"

#include <utility>

#include "oddwheel/errors.hpp"
#include "oddwheel/triangle.hpp"

namespace oddwheel {
namespace {

// Index of pair (i, j), i < j, in the flattened upper triangle of an n x n
// matrix stored row-major.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

IntegralPointSet::IntegralPointSet(std::vector<RationalPoint> points, std::vector<Int> dist)
    : points_(std::move(points)), dist_(std::move(dist)) {}

Int IntegralPointSet::distance(std::size_t i, std::size_t j) const {
    if (i == j) return Int(0);
    if (i > j) std::swap(i, j);
    return dist_[pair_index(points_.size(), i, j)];
}

IntegralPointSet validate_integral(std::vector<RationalPoint> points) {
    if (points.size() < 2) {
        throw ValidationError("need at least 2 points, got " + std::to_string(points.size()));
    }
    const std::size_t n = points.size();
    std::vector<Int> dist;
    dist.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat dx = points[i].x - points[j].x;
            Rat dy = points[i].y - points[j].y;
            Rat sq = dx * dx + dy * dy;
            if (sq == 0) {
                throw ValidationError("points " + std::to_string(i) + " and " +
                                      std::to_string(j) + " coincide");
            }
            if (!is_integer(sq)) {
                throw ValidationError("points " + std::to_string(i) + " and " +
                                      std::to_string(j) + " are at squared distance " +
                                      to_string(sq) + ", not an integer");
            }
            Int sqz = sq.get_num();
            if (!is_perfect_square(sqz)) {
                throw ValidationError("points " + std::to_string(i) + " and " +
                                      std::to_string(j) + " are at squared distance " +
                                      to_string(sqz) + ", not the square of an integer");
            }
            dist.push_back(isqrt(sqz));
        }
    }
    return IntegralPointSet(std::move(points), std::move(dist));
}

bool collinear(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
    Rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return det == 0;
}

std::optional<Int> characteristic_invariance(const IntegralPointSet& ps) {
    const std::vector<RationalPoint>& pts = ps.points();
    std::optional<Int> common;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            for (std::size_t k = j + 1; k < ps.size(); ++k) {
                bool flat_by_det = collinear(pts[i], pts[j], pts[k]);
                IntTriangle t(ps.distance(j, k), ps.distance(i, j), ps.distance(i, k));
                if (flat_by_det != t.is_degenerate()) {
                    throw InvariantViolation(
                        "collinearity routes disagree on points (" + std::to_string(i) +
                        ", " + std::to_string(j) + ", " + std::to_string(k) +
                        "): determinant says " + (flat_by_det ? "flat" : "proper") +
                        ", distance-based area says " +
                        (t.is_degenerate() ? "flat" : "proper"));
                }
                if (flat_by_det) continue;
                std::optional<Int> ch = characteristic(t);
                if (!ch) {
                    throw InvariantViolation("non-collinear triple (" + std::to_string(i) +
                                             ", " + std::to_string(j) + ", " +
                                             std::to_string(k) + ") has no characteristic");
                }
                if (!common) {
                    common = ch;
                } else if (*common != *ch) {
                    throw InvariantViolation(
                        "triple (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                        std::to_string(k) + ") has characteristic " + to_string(*ch) +
                        ", but an earlier triple had " + to_string(*common) +
                        "; an integral point set cannot mix characteristics");
                }
            }
        }
    }
    return common;
}

}  // namespace oddwheel
