#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace arith {

// Arbitrary-precision integer.
using Int = mpz_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Exact rational, always in lowest terms with positive denominator.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(n) {}
    Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    // Parses "p/q" or "p"; throws on malformed input.
    static Rat parse(const std::string& text);

    const Int& num() const { return q_.get_num(); }
    const Int& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_positive() const { return q_ > 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Int floor() const {
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return f;
    }
    Int ceil() const {
        Int c;
        mpz_cdiv_q(c.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return c;
    }
    // Fractional part in [0, 1).
    Rat frac() const { return *this - Rat(floor()); }

    Rat reciprocal() const {
        if (is_zero()) throw std::domain_error("Rat: reciprocal of zero");
        return Rat(den(), num());
    }

    Rat operator-() const { return from_canonical(-q_); }
    Rat operator+(const Rat& o) const { return from_canonical(q_ + o.q_); }
    Rat operator-(const Rat& o) const { return from_canonical(q_ - o.q_); }
    Rat operator*(const Rat& o) const { return from_canonical(q_ * o.q_); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return from_canonical(q_ / o.q_);
    }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    bool operator==(const Rat& o) const { return q_ == o.q_; }
    bool operator!=(const Rat& o) const { return q_ != o.q_; }
    bool operator<(const Rat& o) const { return q_ < o.q_; }
    bool operator<=(const Rat& o) const { return q_ <= o.q_; }
    bool operator>(const Rat& o) const { return q_ > o.q_; }
    bool operator>=(const Rat& o) const { return q_ >= o.q_; }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

private:
    static Rat from_canonical(const mpq_class& q) {
        Rat r;
        r.q_ = q;
        return r;
    }
    mpq_class q_;
};

inline Rat abs(const Rat& r) { return r < Rat(0) ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace arith
