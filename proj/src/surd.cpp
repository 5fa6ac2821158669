#include "oddwheel/surd.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "oddwheel/errors.hpp"
#include "oddwheel/squarefree.hpp"

namespace oddwheel {

MultiSurd::MultiSurd(const Rat& rational) {
    add_term(1, rational);
}

MultiSurd::MultiSurd(const Int& integer) {
    add_term(1, Rat(integer));
}

MultiSurd MultiSurd::sqrt_of(const Int& n) {
    if (n < 0) {
        throw ValidationError("sqrt_of requires a non-negative radicand, got " + to_string(n));
    }
    SquareFreeDecomposition f = squarefree_decompose(n);
    MultiSurd out;
    if (f.radicand == 0) return out;
    out.add_term(f.radicand, Rat(f.square_part));
    return out;
}

bool MultiSurd::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == 1;
}

Rat MultiSurd::rational_part() const {
    auto it = terms_.find(Int(1));
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat MultiSurd::as_rational() const {
    if (!is_rational()) {
        throw ValidationError("value is not rational: " + str());
    }
    return rational_part();
}

void MultiSurd::add_term(const Int& radicand, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(radicand, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

MultiSurd MultiSurd::operator-() const {
    MultiSurd out;
    for (const auto& [d, c] : terms_) out.terms_.emplace(d, Rat(-c));
    return out;
}

MultiSurd& MultiSurd::operator+=(const MultiSurd& other) {
    for (const auto& [d, c] : other.terms_) add_term(d, c);
    return *this;
}

MultiSurd& MultiSurd::operator-=(const MultiSurd& other) {
    for (const auto& [d, c] : other.terms_) add_term(d, Rat(-c));
    return *this;
}

MultiSurd& MultiSurd::operator*=(const MultiSurd& other) {
    MultiSurd product;
    for (const auto& [d1, c1] : terms_) {
        for (const auto& [d2, c2] : other.terms_) {
            // sqrt(d1)*sqrt(d2) = g*sqrt((d1/g)*(d2/g)) with g = gcd(d1, d2).
            // The cofactors are coprime and square-free, so their product is
            // square-free and the term stays canonical.
            Int g;
            mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
            Int radicand = (d1 / g) * (d2 / g);
            product.add_term(radicand, c1 * c2 * Rat(g));
        }
    }
    terms_ = std::move(product.terms_);
    return *this;
}

MultiSurd& MultiSurd::operator*=(const Rat& scale) {
    if (scale == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, c] : terms_) c *= scale;
    return *this;
}

double MultiSurd::approx() const {
    double total = 0.0;
    for (const auto& [d, c] : terms_) {
        total += to_double(c) * std::sqrt(d.get_d());
    }
    return total;
}

std::string MultiSurd::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (d == 1) {
            out << to_string(mag);
        } else if (mag == 1) {
            out << "sqrt(" << to_string(d) << ")";
        } else {
            out << to_string(mag) << "*sqrt(" << to_string(d) << ")";
        }
    }
    return out.str();
}

Rotation::Rotation(MultiSurd cosine, MultiSurd sine)
    : cos_(std::move(cosine)), sin_(std::move(sine)) {
    MultiSurd norm = cos_ * cos_ + sin_ * sin_;
    if (!(norm == MultiSurd(Rat(1)))) {
        throw ValidationError("rotation is not on the unit circle: cos=" + cos_.str() +
                              ", sin=" + sin_.str());
    }
}

Rotation Rotation::identity() {
    return Rotation(unchecked_t{}, MultiSurd(Rat(1)), MultiSurd());
}

Rotation Rotation::compose(const Rotation& other) const {
    return Rotation(unchecked_t{},
                    cos_ * other.cos_ - sin_ * other.sin_,
                    cos_ * other.sin_ + sin_ * other.cos_);
}

Rotation Rotation::conjugate() const {
    return Rotation(unchecked_t{}, cos_, -sin_);
}

RotationKind Rotation::classify() const {
    if (!sin_.is_zero()) return RotationKind::other;
    if (cos_ == MultiSurd(Rat(1))) return RotationKind::identity;
    if (cos_ == MultiSurd(Rat(-1))) return RotationKind::half_turn;
    return RotationKind::other;
}

bool Rotation::is_pi_third_multiple() const {
    if (!cos_.is_rational()) return false;
    Rat c = cos_.rational_part();
    return c == 1 || c == -1 || c == Rat(1, 2) || c == Rat(-1, 2);
}

bool Rotation::is_pi_half_multiple() const {
    if (!cos_.is_rational()) return false;
    Rat c = cos_.rational_part();
    return c == 0 || c == 1 || c == -1;
}

}  // namespace oddwheel
