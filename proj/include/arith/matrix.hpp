#pragma once

#include <Eigen/Core>

#include <vector>

#include "arith/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<arith::Rat> : GenericNumTraits<arith::Rat> {
    typedef arith::Rat Real;
    typedef arith::Rat NonInteger;
    typedef arith::Rat Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };
};

template <>
struct NumTraits<arith::Int> : GenericNumTraits<arith::Int> {
    typedef arith::Int Real;
    typedef arith::Rat NonInteger;
    typedef arith::Int Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 30,
    };
};

}  // namespace Eigen

namespace arith {

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// GMP scalars do not survive Eigen's packed product kernels, so the few
// products we need are spelled out as loops.

inline RatVector apply(const RatMatrix& m, const RatVector& v) {
    RatVector out(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Rat acc(0);
        for (Eigen::Index j = 0; j < m.cols(); ++j) acc += m(i, j) * v(j);
        out(i) = acc;
    }
    return out;
}

inline IntVector apply(const IntMatrix& m, const IntVector& v) {
    IntVector out(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Int acc(0);
        for (Eigen::Index j = 0; j < m.cols(); ++j) acc += m(i, j) * v(j);
        out(i) = acc;
    }
    return out;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out = IntMatrix::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0)
                for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
}

inline Int dot(const IntVector& a, const IntVector& b) {
    Int acc(0);
    for (Eigen::Index i = 0; i < a.size(); ++i) acc += a(i) * b(i);
    return acc;
}

template <typename Scalar>
bool equal(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& a,
           const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (!(a(i) == b(i))) return false;
    return true;
}

template <typename Scalar>
bool is_zero(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!(v(i) == Scalar(0))) return false;
    return true;
}

inline Int vector_gcd(const IntVector& v) {
    Int g(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
    return g;
}

// Divides by the gcd; leaves the zero vector alone.
inline IntVector primitive_part(IntVector v) {
    Int g = vector_gcd(v);
    if (g > 1)
        for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
    return v;
}

inline bool all_positive(const IntVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) <= 0) return false;
    return true;
}

inline bool all_positive(const RatVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_positive()) return false;
    return true;
}

inline RatVector to_rational(const IntVector& v) {
    RatVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rat(v(i));
    return out;
}

// Smallest positive scale making every entry integral, i.e. the lcm of the
// denominators. Returns the scaled integer vector.
inline IntVector clear_denominators(const RatVector& v, Int* scale_out = nullptr) {
    Int scale(1);
    for (Eigen::Index i = 0; i < v.size(); ++i) scale = lcm(scale, v(i).den());
    IntVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).num() * (scale / v(i).den());
    if (scale_out) *scale_out = scale;
    return out;
}

// Lexicographic order on exact vectors, used for canonical output ordering.
template <typename Scalar>
int lex_compare(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& a,
                const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
    Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (a(i) < b(i)) return -1;
        if (b(i) < a(i)) return 1;
    }
    if (a.size() < b.size()) return -1;
    if (b.size() < a.size()) return 1;
    return 0;
}

}  // namespace arith
