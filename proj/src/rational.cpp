#include "arith/rational.hpp"

#include "arith/errors.hpp"

namespace arith {

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Rat Rat::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw InvalidInput("rational with zero denominator: " + text);
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw InvalidInput("malformed rational: '" + text + "'");
    }
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace arith
