#include "arith/linalg.hpp"

#include <algorithm>

#include "arith/errors.hpp"

namespace arith {

RatMatrix laplacian(const Multigraph& g, const RatVector& x) {
    int n = g.size();
    if (x.size() != n) throw InvalidInput("assignment size does not match vertex count");
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = (i == j) ? x(i) : Rat(-g.multiplicity(i, j));
    return m;
}

RatMatrix laplacian(const Multigraph& g, const IntVector& x) {
    return laplacian(g, to_rational(x));
}

Int det(IntMatrix a) {
    Eigen::Index n = a.rows();
    if (a.cols() != n) throw InvalidInput("determinant of a non-square matrix");
    if (n == 0) return Int(1);

    int sign = 1;
    Int prev(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        // Smallest nonzero pivot in the column keeps the entries modest.
        Eigen::Index pivot = -1;
        for (Eigen::Index i = k; i < n; ++i) {
            if (a(i, k) == 0) continue;
            if (pivot < 0 || cmp(abs(a(i, k)), abs(a(pivot, k))) < 0) pivot = i;
        }
        if (pivot < 0) return Int(0);
        if (pivot != k) {
            a.row(k).swap(a.row(pivot));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign < 0 ? Int(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

Rat det(const RatMatrix& a) {
    Eigen::Index n = a.rows();
    if (a.cols() != n) throw InvalidInput("determinant of a non-square matrix");
    if (n == 0) return Rat(1);
    IntMatrix b(n, n);
    Int scale(1);
    for (Eigen::Index j = 0; j < n; ++j) {
        Int colscale(1);
        for (Eigen::Index i = 0; i < n; ++i) colscale = lcm(colscale, a(i, j).den());
        for (Eigen::Index i = 0; i < n; ++i)
            b(i, j) = a(i, j).num() * (colscale / a(i, j).den());
        scale *= colscale;
    }
    return Rat(det(std::move(b)), scale);
}

namespace {

// Row echelon form in place; returns pivot columns. Rows are swapped only.
std::vector<Eigen::Index> echelonize(RatMatrix& a) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index p = -1;
        for (Eigen::Index i = row; i < a.rows(); ++i)
            if (!a(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row) a.row(row).swap(a.row(p));
        Rat inv = a(row, col).reciprocal();
        for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            Rat f = a(i, col);
            for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Eigen::Index rank(RatMatrix a) { return static_cast<Eigen::Index>(echelonize(a).size()); }

std::optional<IntVector> kernel_vector(const RatMatrix& a) {
    Eigen::Index n = a.rows();
    if (a.cols() != n) throw InvalidInput("kernel_vector expects a square matrix");
    if (n == 0) return std::nullopt;
    RatMatrix e = a;
    std::vector<Eigen::Index> pivots = echelonize(e);
    if (static_cast<Eigen::Index>(pivots.size()) != n - 1) return std::nullopt;

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    Eigen::Index free_col = -1;
    for (Eigen::Index c = 0; c < n; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_col = c;

    RatVector x(n);
    for (Eigen::Index c = 0; c < n; ++c) x(c) = Rat(0);
    x(free_col) = Rat(1);
    for (size_t k = 0; k < pivots.size(); ++k)
        x(pivots[k]) = -e(static_cast<Eigen::Index>(k), free_col);

    IntVector z = primitive_part(clear_denominators(x));
    bool pos = true, neg = true;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (z(i) <= 0) pos = false;
        if (z(i) >= 0) neg = false;
    }
    if (neg)
        for (Eigen::Index i = 0; i < n; ++i) z(i) = -z(i);
    else if (!pos)
        return std::nullopt;
    return z;
}

namespace {

// Nearest-integer quotient, |a - q b| <= |b| / 2. The floor-division
// remainder has the same sign as b, so moving it toward zero is always q+1.
Int balanced_quotient(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * abs(r) > abs(b)) q += 1;
    return q;
}

struct SnfState {
    IntMatrix a;
    IntMatrix* left = nullptr;
    IntMatrix* right = nullptr;

    void row_op(Eigen::Index dst, Eigen::Index src, const Int& q) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(dst, j) -= q * a(src, j);
        if (left)
            for (Eigen::Index j = 0; j < left->cols(); ++j)
                (*left)(dst, j) -= q * (*left)(src, j);
    }
    void col_op(Eigen::Index dst, Eigen::Index src, const Int& q) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, dst) -= q * a(i, src);
        if (right)
            for (Eigen::Index i = 0; i < right->rows(); ++i)
                (*right)(i, dst) -= q * (*right)(i, src);
    }
    void swap_rows(Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        a.row(i).swap(a.row(j));
        if (left) left->row(i).swap(left->row(j));
    }
    void swap_cols(Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        a.col(i).swap(a.col(j));
        if (right) right->col(i).swap(right->col(j));
    }
    void negate_row(Eigen::Index i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
        if (left)
            for (Eigen::Index j = 0; j < left->cols(); ++j) (*left)(i, j) = -(*left)(i, j);
    }
};

std::vector<Int> snf_reduce(SnfState& s) {
    IntMatrix& a = s.a;
    Eigen::Index m = a.rows(), n = a.cols();
    Eigen::Index steps = std::min(m, n);

    for (Eigen::Index t = 0; t < steps; ++t) {
        for (;;) {
            // Minimal nonzero |entry| of the trailing submatrix as pivot.
            Eigen::Index pi = -1, pj = -1;
            for (Eigen::Index i = t; i < m; ++i)
                for (Eigen::Index j = t; j < n; ++j) {
                    if (a(i, j) == 0) continue;
                    if (pi < 0 || cmp(abs(a(i, j)), abs(a(pi, pj))) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                for (Eigen::Index r = t; r < steps; ++r) a(r, r) = 0;
                goto done;
            }
            s.swap_rows(t, pi);
            s.swap_cols(t, pj);

            bool dirty = false;
            for (Eigen::Index i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                s.row_op(i, t, balanced_quotient(a(i, t), a(t, t)));
                if (a(i, t) != 0) dirty = true;
            }
            for (Eigen::Index j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                s.col_op(j, t, balanced_quotient(a(t, j), a(t, t)));
                if (a(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Pivot must divide the rest of the submatrix.
            bool fixed = false;
            for (Eigen::Index i = t + 1; i < m && !fixed; ++i)
                for (Eigen::Index j = t + 1; j < n && !fixed; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        s.row_op(t, i, Int(-1));  // adds row i to row t
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (a(t, t) < 0) s.negate_row(t);
    }
done:
    std::vector<Int> d;
    for (Eigen::Index t = 0; t < steps; ++t) d.push_back(a(t, t));
    return d;
}

}  // namespace

std::vector<Int> smith_normal_form(IntMatrix a) {
    SnfState s{std::move(a)};
    return snf_reduce(s);
}

SmithDecomposition smith_normal_form_with_transforms(IntMatrix a) {
    SmithDecomposition out;
    out.left = IntMatrix::Identity(a.rows(), a.rows());
    out.right = IntMatrix::Identity(a.cols(), a.cols());
    SnfState s{std::move(a), &out.left, &out.right};
    out.factors = snf_reduce(s);
    return out;
}

IntMatrix integer_kernel_basis(const IntVector& r) {
    Eigen::Index n = r.size();
    if (n == 0 || vector_gcd(r) != 1) throw InvalidInput("integer_kernel_basis needs gcd(r) = 1");

    // Row-reduce the column r to e1 with unimodular ops, mirrored on m.
    IntVector w = r;
    IntMatrix m = IntMatrix::Identity(n, n);
    for (;;) {
        Eigen::Index pivot = -1;
        int nonzero = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (w(i) == 0) continue;
            ++nonzero;
            if (pivot < 0 || cmp(abs(w(i)), abs(w(pivot))) < 0) pivot = i;
        }
        if (nonzero <= 1) {
            if (pivot != 0) {
                w.row(0).swap(w.row(pivot));
                m.row(0).swap(m.row(pivot));
            }
            if (w(0) < 0)
                for (Eigen::Index j = 0; j < n; ++j) m(0, j) = -m(0, j);
            break;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == pivot || w(i) == 0) continue;
            Int q = balanced_quotient(w(i), w(pivot));
            w(i) -= q * w(pivot);
            for (Eigen::Index j = 0; j < n; ++j) m(i, j) -= q * m(pivot, j);
        }
    }

    IntMatrix basis(n - 1, n);
    for (Eigen::Index i = 1; i < n; ++i) {
        // Leading sign normalized for deterministic output.
        Eigen::Index lead = -1;
        for (Eigen::Index j = 0; j < n && lead < 0; ++j)
            if (m(i, j) != 0) lead = j;
        bool flip = lead >= 0 && m(i, lead) < 0;
        for (Eigen::Index j = 0; j < n; ++j) basis(i - 1, j) = flip ? Int(-m(i, j)) : m(i, j);
    }
    for (Eigen::Index i = 0; i < n - 1; ++i) {
        Int acc(0);
        for (Eigen::Index j = 0; j < n; ++j) acc += basis(i, j) * r(j);
        if (acc != 0) throw InternalError("kernel basis row not orthogonal to r");
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
    if (a.rows() != b.size()) throw InvalidInput("solve: dimension mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b(i);
    }
    std::vector<Eigen::Index> pivots = echelonize(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
    if (static_cast<Eigen::Index>(pivots.size()) != a.cols())
        throw InvalidInput("solve: matrix does not have full column rank");
    RatVector x(a.cols());
    for (size_t k = 0; k < pivots.size(); ++k)
        x(pivots[k]) = aug(static_cast<Eigen::Index>(k), a.cols());
    return x;
}

}  // namespace arith
