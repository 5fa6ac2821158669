#include "oddwheel/wheel.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "oddwheel/errors.hpp"

namespace oddwheel {
namespace {

std::string rotation_str(const Rotation& r) {
    return "cos = " + r.cos().str() + ", sin = " + r.sin().str();
}

// Depth-first zip through the remaining sign choices; signs[0] stays as the
// caller fixed it.  Stops at the first accepted full product.
template <typename Accept>
bool sign_dfs(const std::vector<Rotation>& plus, const std::vector<Rotation>& minus,
              std::size_t depth, const Rotation& prefix, std::vector<int>& signs,
              const Accept& accept) {
    if (depth == plus.size()) {
        return accept(prefix, signs);
    }
    signs[depth] = +1;
    if (sign_dfs(plus, minus, depth + 1, prefix.compose(plus[depth]), signs, accept)) {
        return true;
    }
    signs[depth] = -1;
    return sign_dfs(plus, minus, depth + 1, prefix.compose(minus[depth]), signs, accept);
}

// True when some sign assignment over the listed rotations composes to a
// multiple of pi.  The first member's sign can be fixed because conjugating
// the whole product preserves membership in {identity, half turn}.
bool group_reaches_pi_multiple(const std::vector<Rotation>& plus,
                               const std::vector<Rotation>& minus,
                               const std::vector<std::size_t>& indices) {
    std::vector<Rotation> gplus, gminus;
    gplus.reserve(indices.size());
    gminus.reserve(indices.size());
    for (std::size_t i : indices) {
        gplus.push_back(plus[i]);
        gminus.push_back(minus[i]);
    }
    std::vector<int> signs(indices.size(), +1);
    return sign_dfs(gplus, gminus, 1, gplus[0], signs,
                    [](const Rotation& product, const std::vector<int>&) {
                        return product.classify() != RotationKind::other;
                    });
}

bool points_pairwise_distinct(const std::vector<SurdPoint>& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) return false;
        }
    }
    return true;
}

}  // namespace

WheelLengths::WheelLengths(std::vector<Int> spokes, std::vector<Int> rims)
    : spokes_(std::move(spokes)), rims_(std::move(rims)) {
    if (spokes_.size() < 3) {
        throw ValidationError("a wheel needs at least 3 spokes, got " +
                              std::to_string(spokes_.size()));
    }
    if (rims_.size() != spokes_.size()) {
        throw ValidationError("expected " + std::to_string(spokes_.size()) + " rims, got " +
                              std::to_string(rims_.size()));
    }
    for (std::size_t i = 0; i < spokes_.size(); ++i) {
        try {
            triangle(i);
        } catch (const ValidationError& e) {
            throw ValidationError("hub triangle " + std::to_string(i) + ": " + e.what());
        }
    }
}

IntTriangle WheelLengths::triangle(std::size_t i) const {
    return IntTriangle(rims_[i], spokes_[i], spokes_[(i + 1) % spokes_.size()]);
}

bool WheelLengths::all_odd() const {
    auto odd = [](const Int& v) { return mpz_odd_p(v.get_mpz_t()) != 0; };
    return std::all_of(spokes_.begin(), spokes_.end(), odd) &&
           std::all_of(rims_.begin(), rims_.end(), odd);
}

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_) {
        if (s != 1 && s != -1) {
            throw ValidationError("signs must be +1 or -1, got " + std::to_string(s));
        }
    }
}

SignVector SignVector::all_plus(std::size_t n) {
    return SignVector(std::vector<int>(n, +1));
}

std::vector<Rotation> wheel_angles(const WheelLengths& w, const SignVector& s) {
    if (s.size() != w.size()) {
        throw ValidationError("sign vector length " + std::to_string(s.size()) +
                              " does not match wheel size " + std::to_string(w.size()));
    }
    std::vector<Rotation> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        Rotation r = triangle_rotation(w.triangle(i));
        out.push_back(s[i] == 1 ? r : r.conjugate());
    }
    return out;
}

bool closure_decide(const WheelLengths& w, const SignVector& s) {
    Rotation product = Rotation::identity();
    for (const Rotation& r : wheel_angles(w, s)) {
        product = product.compose(r);
    }
    return product.is_identity();
}

std::vector<ResidualGroup> residual_groups(const WheelLengths& w) {
    std::map<Int, std::vector<std::size_t>> by_residual;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::optional<Int> ch = characteristic(w.triangle(i));
        by_residual[ch ? *ch : Int(0)].push_back(i);
    }
    std::vector<ResidualGroup> out;
    out.reserve(by_residual.size());
    for (auto& [residual, indices] : by_residual) {
        out.push_back(ResidualGroup{residual, std::move(indices)});
    }
    return out;
}

std::vector<ResidualGroupReport> residual_group_check(const WheelLengths& w,
                                                      const SignVector& s) {
    if (!closure_decide(w, s)) {
        throw ValidationError("residual group check requires a closed wheel");
    }
    std::vector<Rotation> angles = wheel_angles(w, s);
    std::vector<ResidualGroupReport> reports;
    for (const ResidualGroup& group : residual_groups(w)) {
        Rotation composition = Rotation::identity();
        for (std::size_t i : group.indices) {
            composition = composition.compose(angles[i]);
        }
        bool fine = composition.is_pi_third_multiple() || composition.is_pi_half_multiple();
        RotationKind kind = composition.classify();
        if (!fine || kind == RotationKind::other) {
            throw ResidualSumViolation(
                "closed wheel has a residual group (residual " + to_string(group.residual) +
                    ") composing to " + rotation_str(composition) + ", not a multiple of pi",
                to_string(group.residual), rotation_str(composition));
        }
        reports.push_back(
            ResidualGroupReport{group.residual, group.indices, composition, kind, fine});
    }
    return reports;
}

std::optional<SignVector> exhaustive_closure_search(const WheelLengths& w,
                                                    bool require_distinct) {
    std::vector<Rotation> plus = wheel_angles(w, SignVector::all_plus(w.size()));
    std::vector<Rotation> minus;
    minus.reserve(plus.size());
    for (const Rotation& r : plus) minus.push_back(r.conjugate());

    std::vector<int> signs(w.size(), +1);
    auto accept = [&](const Rotation& product, const std::vector<int>& chosen) {
        if (!product.is_identity()) return false;
        if (!require_distinct) return true;
        return points_pairwise_distinct(reconstruct_coordinates(w, SignVector(chosen)));
    };
    if (sign_dfs(plus, minus, 1, plus[0], signs, accept)) {
        return SignVector(signs);
    }
    return std::nullopt;
}

Certificate realizable(const WheelLengths& w, bool require_distinct) {
    std::vector<Rotation> plus = wheel_angles(w, SignVector::all_plus(w.size()));
    std::vector<Rotation> minus;
    minus.reserve(plus.size());
    for (const Rotation& r : plus) minus.push_back(r.conjugate());

    for (const ResidualGroup& group : residual_groups(w)) {
        if (group.residual == 0) continue;  // degenerate angles are multiples of pi alone
        if (!group_reaches_pi_multiple(plus, minus, group.indices)) {
            Rotation exhibit = Rotation::identity();
            for (std::size_t i : group.indices) exhibit = exhibit.compose(plus[i]);
            Certificate cert(CertificateKind::residual_sum_violation, w);
            cert.offending_residual = group.residual;
            cert.group_rotation = exhibit;
            return cert;
        }
    }

    if (std::optional<SignVector> witness = exhaustive_closure_search(w, require_distinct)) {
        Certificate cert(CertificateKind::realizable, w);
        cert.witness_signs = *witness;
        cert.coordinates = reconstruct_coordinates(w, *witness);
        return cert;
    }
    Certificate cert(CertificateKind::closure_failure_all_signs, w);
    cert.sign_vectors_tried = std::size_t{1} << (w.size() - 1);
    return cert;
}

std::vector<AngleClass> class_trail(const WheelLengths& w) {
    if (!w.all_odd()) {
        throw ValidationError("class trail requires all spokes and rims odd");
    }
    const std::size_t n = w.size();
    std::vector<Rotation> angles = wheel_angles(w, SignVector::all_plus(n));
    std::vector<Int> residual(n);
    std::vector<AngleClass> step_class;
    step_class.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<Int> ch = characteristic(w.triangle(i));
        if (!ch) {
            throw InvariantViolation("all-odd hub triangle " + std::to_string(i) +
                                     " is degenerate; odd side sums cannot be collinear");
        }
        residual[i] = *ch;
        try {
            step_class.push_back(angle_class(triangle_cos(w.triangle(i))));
        } catch (const NoClassError& e) {
            throw InvariantViolation("all-odd hub triangle " + std::to_string(i) +
                                     " has no angle class: " + e.what());
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return residual[a] < residual[b]; });

    std::vector<AngleClass> trail;
    trail.reserve(n + 1);
    trail.push_back(AngleClass(2));  // the empty angle sum has cosine 1
    Rotation acc = Rotation::identity();
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0 && residual[order[j]] != residual[order[j - 1]] &&
            acc.classify() == RotationKind::other) {
            throw TrailError("residual group " + to_string(residual[order[j - 1]]) +
                             " composes to " + rotation_str(acc) +
                             " under all-plus signs, not a multiple of pi; partial sums in "
                             "later groups have no rational cosine");
        }
        acc = acc.compose(angles[order[j]]);
        Rat cosine;
        try {
            cosine = acc.cos().as_rational();
        } catch (const ValidationError&) {
            throw InvariantViolation(
                "partial sum " + std::to_string(j + 1) +
                " has irrational cosine inside a single residual group: " + acc.cos().str());
        }
        AngleClass current = [&] {
            try {
                return angle_class(cosine);
            } catch (const NoClassError& e) {
                throw InvariantViolation("partial sum " + std::to_string(j + 1) +
                                         " (cosine " + to_string(cosine) +
                                         ") has no class inside a residual group: " + e.what());
            }
        }();
        const AngleClass& step = step_class[order[j]];
        const AngleClass& previous = trail.back();
        if (!class_triple_admissible(previous.value(), step.value(), current.value())) {
            throw InvariantViolation(
                "trail step " + std::to_string(j + 1) + " violates the class congruence: (" +
                std::to_string(previous.value()) + ", " + std::to_string(step.value()) + ", " +
                std::to_string(current.value()) + ")");
        }
        trail.push_back(current);
    }
    return trail;
}

Certificate certify_odd_wheel(const WheelLengths& w, bool cross_check) {
    if (w.size() % 2 == 0) {
        throw ValidationError("odd-wheel certification requires an odd cycle length, got " +
                              std::to_string(w.size()));
    }
    if (!w.all_odd()) {
        throw ValidationError("odd-wheel certification requires all spokes and rims odd");
    }
    ParityCertificate parity = parity_certificate(w.spokes());
    if (parity.conclusion != ParityConclusion::contradiction) {
        throw InvariantViolation(
            "parity certificate inconclusive for an odd wheel with odd spokes");
    }
    if (cross_check && exhaustive_closure_search(w).has_value()) {
        throw InvariantViolation(
            "exhaustive sign search closed an all-odd odd wheel despite the parity "
            "contradiction");
    }
    Certificate cert(CertificateKind::parity_contradiction, w);
    cert.parity = std::move(parity);
    return cert;
}

std::vector<SurdPoint> reconstruct_coordinates(const WheelLengths& w, const SignVector& s) {
    std::vector<Rotation> angles = wheel_angles(w, s);
    std::vector<SurdPoint> points;
    points.reserve(w.size() + 1);
    points.push_back(SurdPoint{MultiSurd(), MultiSurd()});  // hub at the origin
    Rotation heading = Rotation::identity();
    for (std::size_t i = 0; i < w.size(); ++i) {
        Rat spoke(w.spokes()[i]);
        points.push_back(SurdPoint{heading.cos() * spoke, heading.sin() * spoke});
        heading = heading.compose(angles[i]);
    }
    return points;
}

VerifiedWheel verify_coordinates(const std::vector<RationalPoint>& points, bool require_odd) {
    if (points.size() < 4) {
        throw ValidationError("need a hub plus at least 3 cycle points, got " +
                              std::to_string(points.size()));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) {
                throw ValidationError("points " + std::to_string(i) + " and " +
                                      std::to_string(j) + " coincide");
            }
        }
    }
    const std::size_t n = points.size() - 1;

    auto edge_length = [&](std::size_t i, std::size_t j) -> Int {
        Rat dx = points[i].x - points[j].x;
        Rat dy = points[i].y - points[j].y;
        Rat sq = dx * dx + dy * dy;
        if (!is_integer(sq)) {
            throw ValidationError("edge between points " + std::to_string(i) + " and " +
                                  std::to_string(j) + " has squared length " + to_string(sq) +
                                  ", not an integer; coordinates must form integer-length "
                                  "edges exactly (supply exact rationals)");
        }
        Int sqz = sq.get_num();
        if (!is_perfect_square(sqz)) {
            throw ValidationError("edge between points " + std::to_string(i) + " and " +
                                  std::to_string(j) + " has squared length " + to_string(sqz) +
                                  ", not the square of an integer");
        }
        Int len = isqrt(sqz);
        if (require_odd && mpz_even_p(len.get_mpz_t())) {
            throw ValidationError("edge between points " + std::to_string(i) + " and " +
                                  std::to_string(j) + " has even length " + to_string(len) +
                                  "; odd lengths required");
        }
        return len;
    };

    std::vector<Int> spokes, rims;
    spokes.reserve(n);
    rims.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        spokes.push_back(edge_length(0, 1 + i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        rims.push_back(edge_length(1 + i, 1 + (i + 1) % n));
    }

    std::vector<int> signs;
    signs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const RationalPoint& a = points[1 + i];
        const RationalPoint& b = points[1 + (i + 1) % n];
        Rat cross = (a.x - points[0].x) * (b.y - points[0].y) -
                    (a.y - points[0].y) * (b.x - points[0].x);
        signs.push_back(cross < 0 ? -1 : +1);
    }

    VerifiedWheel verified{WheelLengths(std::move(spokes), std::move(rims)),
                           SignVector(std::move(signs))};
    if (!closure_decide(verified.wheel, verified.signs)) {
        throw InvariantViolation(
            "angles recovered from an explicit placement failed to close");
    }
    return verified;
}

}  // namespace oddwheel
