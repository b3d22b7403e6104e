#include "arith/egyptian.hpp"

#include "arith/errors.hpp"

namespace arith {

std::vector<Int> sylvester_greedy(const Rat& q) {
    if (!q.is_positive() || q > Rat(1))
        throw InvalidInput("sylvester_greedy expects 0 < q <= 1, got " + q.str());
    std::vector<Int> parts;
    Rat rest = q;
    while (!rest.is_zero()) {
        Int a = rest.reciprocal().ceil();
        parts.push_back(a);
        rest -= Rat(Int(1), a);  // numerator strictly decreases, so this stops
    }
    return parts;
}

std::vector<Int> repeat_denominator(const Rat& q) {
    if (!q.is_positive() || q > Rat(1))
        throw InvalidInput("repeat_denominator expects 0 < q <= 1, got " + q.str());
    std::vector<Int> parts;
    for (Int i(0); i < q.num(); ++i) parts.push_back(q.den());
    return parts;
}

std::vector<Int> hirzebruch_jung(const Rat& x) {
    if (x <= Rat(1)) throw InvalidInput("hirzebruch_jung expects x > 1, got " + x.str());
    std::vector<Int> digits;
    Rat y = x;
    for (;;) {
        Int d = y.ceil();
        digits.push_back(d);
        Rat gap = Rat(d) - y;
        if (gap.is_zero()) break;
        y = gap.reciprocal();  // gap in (0,1), so y > 1 and the next digit is >= 2
    }
    return digits;
}

}  // namespace arith
