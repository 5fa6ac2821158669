#include "doctest.h"

#include <cstddef>
#include <random>
#include <vector>

#include "oddwheel/errors.hpp"
#include "oddwheel/pointset.hpp"
#include "support/oracles.hpp"

using namespace oddwheel;

namespace {

std::vector<RationalPoint> int_points(std::vector<std::pair<int, int>> coords) {
    std::vector<RationalPoint> out;
    for (auto [x, y] : coords) out.push_back(RationalPoint{Rat(x), Rat(y)});
    return out;
}

const std::vector<RationalPoint> kRectangle =
    int_points({{0, 0}, {4, 0}, {4, 3}, {0, 3}});

// Four concyclic points with all six distances integral.
const std::vector<RationalPoint> kCircleQuad =
    int_points({{0, 0}, {25, 0}, {9, 12}, {16, 12}});

}  // namespace

TEST_CASE("validate_integral accepts classic integral sets") {
    IntegralPointSet rect = validate_integral(kRectangle);
    CHECK(rect.size() == 4);
    CHECK(rect.distance_list() == std::vector<Int>{4, 5, 3, 3, 5, 4});
    CHECK(rect.distance(0, 1) == 4);
    CHECK(rect.distance(1, 0) == 4);
    CHECK(rect.distance(2, 2) == 0);
    CHECK(rect.distance(1, 3) == 5);

    IntegralPointSet tri = validate_integral(int_points({{0, 0}, {3, 0}, {0, 4}}));
    CHECK(tri.distance_list() == std::vector<Int>{3, 4, 5});

    IntegralPointSet quad = validate_integral(kCircleQuad);
    CHECK(quad.distance_list() == std::vector<Int>{25, 15, 20, 20, 15, 7});

    // Rational coordinates are fine as long as distances are integers.
    IntegralPointSet tilted = validate_integral(
        {RationalPoint{Rat(0), Rat(0)}, RationalPoint{Rat(3, 5), Rat(4, 5)}});
    CHECK(tilted.distance_list() == std::vector<Int>{1});
}

TEST_CASE("validate_integral rejects non-integral and malformed sets") {
    CHECK_THROWS_AS(validate_integral(int_points({{0, 0}, {1, 1}})), ValidationError);
    CHECK_THROWS_AS(validate_integral(int_points({{0, 0}})), ValidationError);
    CHECK_THROWS_AS(validate_integral({}), ValidationError);
    CHECK_THROWS_AS(validate_integral(int_points({{0, 0}, {1, 0}, {0, 0}})),
                    ValidationError);
    CHECK_THROWS_AS(validate_integral({RationalPoint{Rat(0), Rat(0)},
                                       RationalPoint{Rat(1, 2), Rat(0)}}),
                    ValidationError);

    // The error names the offending pair and the exact squared distance.
    try {
        validate_integral(int_points({{0, 0}, {3, 0}, {1, 1}}));
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        std::string msg = e.what();
        CHECK(msg.find("0 and 2") != std::string::npos);
        CHECK(msg.find("2") != std::string::npos);
    }
}

TEST_CASE("collinearity predicate") {
    CHECK(collinear(RationalPoint{Rat(0), Rat(0)}, RationalPoint{Rat(1), Rat(1)},
                    RationalPoint{Rat(5), Rat(5)}));
    CHECK(collinear(RationalPoint{Rat(2), Rat(3)}, RationalPoint{Rat(2), Rat(7)},
                    RationalPoint{Rat(2), Rat(-1)}));
    CHECK_FALSE(collinear(RationalPoint{Rat(0), Rat(0)}, RationalPoint{Rat(1), Rat(0)},
                          RationalPoint{Rat(0), Rat(1)}));
}

TEST_CASE("characteristic invariance on frozen sets") {
    std::optional<Int> rect = characteristic_invariance(validate_integral(kRectangle));
    REQUIRE(rect.has_value());
    CHECK(*rect == 1);

    std::optional<Int> scaled = characteristic_invariance(
        validate_integral(int_points({{0, 0}, {3, 0}, {0, 4}, {3, 4}})));
    REQUIRE(scaled.has_value());
    CHECK(*scaled == 1);

    std::optional<Int> quad = characteristic_invariance(validate_integral(kCircleQuad));
    REQUIRE(quad.has_value());
    CHECK(*quad == 1);

    // Entirely collinear sets have no triangle, hence no characteristic.
    CHECK_FALSE(
        characteristic_invariance(validate_integral(int_points({{0, 0}, {1, 0}, {2, 0}})))
            .has_value());
    CHECK_FALSE(
        characteristic_invariance(validate_integral(int_points({{0, 0}, {7, 0}})))
            .has_value());

    // Collinear triples inside a bigger set are skipped, not fatal.
    std::optional<Int> mixed = characteristic_invariance(
        validate_integral(int_points({{0, 0}, {3, 0}, {6, 0}, {3, 4}})));
    REQUIRE(mixed.has_value());
    CHECK(*mixed == 1);
}

TEST_CASE("characteristic invariance across random rigid motions") {
    // Rational rotations (Pythagorean cosine/sine pairs) and integer
    // translations preserve integrality and the characteristic.
    const std::vector<std::pair<Rat, Rat>> rotations = {
        {Rat(3, 5), Rat(4, 5)},   {Rat(4, 5), Rat(-3, 5)}, {Rat(5, 13), Rat(12, 13)},
        {Rat(-3, 5), Rat(4, 5)},  {Rat(12, 13), Rat(5, 13)}, {Rat(1), Rat(0)},
    };
    const std::vector<std::vector<RationalPoint>> bases = {
        kRectangle,
        kCircleQuad,
        int_points({{0, 0}, {3, 0}, {6, 0}, {3, 4}}),
        int_points({{0, 0}, {5, 0}, {5, 12}}),
    };

    std::mt19937_64 rng = oracles::seeded_rng(20260819);
    std::uniform_int_distribution<int> pick_rot(0, static_cast<int>(rotations.size()) - 1);
    std::uniform_int_distribution<int> shift(-12, 12);

    for (const std::vector<RationalPoint>& base : bases) {
        for (int trial = 0; trial < 25; ++trial) {
            auto [c, s] = rotations[static_cast<std::size_t>(pick_rot(rng))];
            Rat tx(shift(rng)), ty(shift(rng));
            std::vector<RationalPoint> moved;
            for (const RationalPoint& p : base) {
                moved.push_back(RationalPoint{c * p.x - s * p.y + tx,
                                              s * p.x + c * p.y + ty});
            }
            IntegralPointSet ps = validate_integral(moved);
            std::optional<Int> d = characteristic_invariance(ps);
            REQUIRE(d.has_value());
            CHECK(*d == 1);
        }
    }

    // Collinear sets stay collinear under rigid motions.
    for (int trial = 0; trial < 10; ++trial) {
        auto [c, s] = rotations[static_cast<std::size_t>(pick_rot(rng))];
        std::vector<RationalPoint> moved;
        for (int x : {0, 2, 5, 9}) {
            moved.push_back(RationalPoint{c * Rat(x), s * Rat(x)});
        }
        CHECK_FALSE(characteristic_invariance(validate_integral(moved)).has_value());
    }
}
