#include "oddwheel/numeric.hpp"

#include "oddwheel/errors.hpp"

namespace oddwheel {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw ValidationError("rational with zero denominator");
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rat& q) {
    return q.get_den() == 1;
}

Int isqrt(const Int& n) {
    if (n < 0) {
        throw ValidationError("isqrt of negative integer");
    }
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::string to_string(const Int& n) {
    return n.get_str();
}

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_str();
}

double to_double(const Rat& q) {
    return q.get_d();
}

Int parse_int(const std::string& s) {
    Int n;
    if (s.empty() || mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0) {
        throw ValidationError("not a base-10 integer: '" + s + "'");
    }
    return n;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rat(parse_int(s));
    }
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    return make_rat(num, den);
}

}  // namespace oddwheel
