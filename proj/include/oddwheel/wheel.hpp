#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "oddwheel/classalgebra.hpp"
#include "oddwheel/numeric.hpp"
#include "oddwheel/surd.hpp"
#include "oddwheel/triangle.hpp"

namespace oddwheel {

// Integer edge lengths of a candidate hub-and-cycle embedding: spokes[i] is
// the distance from the hub to cycle vertex i, rims[i] the chord between
// cycle vertices i and i+1 (indices cyclic).  Construction validates that
// every hub triangle (rims[i]; spokes[i], spokes[i+1]) satisfies the
// triangle inequality; degenerate triangles are allowed.
class WheelLengths {
public:
    WheelLengths(std::vector<Int> spokes, std::vector<Int> rims);

    std::size_t size() const { return spokes_.size(); }
    const std::vector<Int>& spokes() const { return spokes_; }
    const std::vector<Int>& rims() const { return rims_; }

    // Hub triangle i: rim chord opposite the apex, enclosed by the spokes.
    IntTriangle triangle(std::size_t i) const;

    bool all_odd() const;

    bool operator==(const WheelLengths& other) const {
        return spokes_ == other.spokes_ && rims_ == other.rims_;
    }

private:
    std::vector<Int> spokes_;
    std::vector<Int> rims_;
};

// Orientation of each directed hub angle: +1 keeps the non-negative sine
// branch, -1 negates it.
class SignVector {
public:
    explicit SignVector(std::vector<int> signs);
    static SignVector all_plus(std::size_t n);

    std::size_t size() const { return signs_.size(); }
    int operator[](std::size_t i) const { return signs_[i]; }
    const std::vector<int>& signs() const { return signs_; }

    bool operator==(const SignVector& other) const { return signs_ == other.signs_; }

private:
    std::vector<int> signs_;
};

// Exact plane point with coordinates in a multi-quadratic extension;
// produced when a wheel embedding is laid out from its angles.
struct SurdPoint {
    MultiSurd x;
    MultiSurd y;

    bool operator==(const SurdPoint& other) const {
        return x == other.x && y == other.y;
    }
};

enum class CertificateKind {
    parity_contradiction,
    closure_failure_all_signs,
    residual_sum_violation,
    realizable,
};

// Structured verdict about a wheel's realizability, machine-checkable from
// the carried detail.
struct Certificate {
    Certificate(CertificateKind k, WheelLengths w) : kind(k), wheel(std::move(w)) {}

    CertificateKind kind;
    WheelLengths wheel;  // echo of the input

    // kind == parity_contradiction
    std::optional<ParityCertificate> parity;
    // kind == closure_failure_all_signs
    std::optional<std::size_t> sign_vectors_tried;
    // kind == realizable
    std::optional<SignVector> witness_signs;
    std::optional<std::vector<SurdPoint>> coordinates;
    // kind == residual_sum_violation: a residual whose group cannot compose
    // to a multiple of pi under any signs, with the all-plus composition.
    std::optional<Int> offending_residual;
    std::optional<Rotation> group_rotation;
};

// The n directed hub angles as exact rotations: magnitudes from the hub
// triangles, orientations from the sign vector.
std::vector<Rotation> wheel_angles(const WheelLengths& w, const SignVector& s);

// True iff the composition of all directed hub angles is the identity, i.e.
// the angles sum to an integer multiple of 2*pi (zero and negative multiples
// included).
bool closure_decide(const WheelLengths& w, const SignVector& s);

// Triangles grouped by characteristic, ascending.  Degenerate triangles
// (no characteristic) form a synthetic group under key 0, listed first.
struct ResidualGroup {
    Int residual;
    std::vector<std::size_t> indices;
};

std::vector<ResidualGroup> residual_groups(const WheelLengths& w);

// Per-group verdict produced by residual_group_check.
struct ResidualGroupReport {
    Int residual;
    std::vector<std::size_t> indices;
    Rotation composition;
    RotationKind kind;        // identity or half_turn
    bool fine_multiple;       // composition is a multiple of pi/3 or pi/2
};

// For a closed wheel, verifies that every residual group composes to a
// multiple of pi (and, as a refinement, to a multiple of pi/3 or pi/2).
// Requires closure_decide(w, s); a group failure on a genuinely closed wheel
// is not a property of the input but a broken library fact, and raises
// ResidualSumViolation.
std::vector<ResidualGroupReport> residual_group_check(const WheelLengths& w,
                                                      const SignVector& s);

// First sign vector (lexicographically, + before -, first sign fixed to +)
// under which the wheel closes; nullopt if none of the 2^(n-1) works.  With
// require_distinct, witnesses that place two cycle vertices on the same
// point are skipped.
std::optional<SignVector> exhaustive_closure_search(const WheelLengths& w,
                                                    bool require_distinct = false);

// Decision procedure: residual-group feasibility first (a group that cannot
// reach a multiple of pi under any signs rules out closure outright), then
// the exhaustive sign search.  Returns kind realizable (with witness signs
// and coordinates), residual_sum_violation, or closure_failure_all_signs.
Certificate realizable(const WheelLengths& w, bool require_distinct = false);

// The class trail of an all-odd wheel: angles reordered so equal residuals
// are consecutive, partial sums composed exactly with all-plus signs,
// classes extracted per partial sum.  Element 0 is class 2 (the empty sum);
// the result has length n+1.  Every step is validated against the class
// triple congruence.  Throws TrailError when a completed residual group
// fails to reach a multiple of pi, leaving later partial sums classless.
std::vector<AngleClass> class_trail(const WheelLengths& w);

// The non-realizability pipeline for odd wheels with all-odd lengths:
// produces a parity_contradiction certificate.  With cross_check, also runs
// the exhaustive sign search and insists it finds no closure.
Certificate certify_odd_wheel(const WheelLengths& w, bool cross_check = false);

// Lays out the embedding determined by the lengths and signs: hub at the
// origin (point 0), cycle vertex 1 on the positive x-axis, subsequent
// vertices by composing the directed angles.  Exact coordinates.
std::vector<SurdPoint> reconstruct_coordinates(const WheelLengths& w, const SignVector& s);

struct VerifiedWheel {
    WheelLengths wheel;
    SignVector signs;
};

// Reads a hub-first list of exact rational points (>= 4, pairwise distinct),
// checks every wheel edge has integer length (odd when require_odd), and
// recovers the lengths together with the sign vector realized by the
// placement.
VerifiedWheel verify_coordinates(const std::vector<RationalPoint>& points, bool require_odd);

}  // namespace oddwheel
