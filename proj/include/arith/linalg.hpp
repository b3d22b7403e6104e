#pragma once

#include <optional>
#include <vector>

#include "arith/graph.hpp"
#include "arith/matrix.hpp"

namespace arith {

// Generalized Laplacian: diagonal x, off-diagonal -m_uv.
RatMatrix laplacian(const Multigraph& g, const RatVector& x);
RatMatrix laplacian(const Multigraph& g, const IntVector& x);

// Exact determinant by fraction-free Bareiss elimination.
Int det(IntMatrix a);
// Rational determinant: clears denominators column-wise, then integer Bareiss.
Rat det(const RatMatrix& a);

Eigen::Index rank(RatMatrix a);

// If a has rank n-1 and its kernel line meets the positive orthant, returns
// the primitive positive integer generator; otherwise nullopt.
std::optional<IntVector> kernel_vector(const RatMatrix& a);

// Smith normal form diagonal d1 | d2 | ... (non-negative, full length
// min(rows, cols), trailing zeros for rank deficiency).
std::vector<Int> smith_normal_form(IntMatrix a);

struct SmithDecomposition {
    std::vector<Int> factors;
    IntMatrix left;   // unimodular
    IntMatrix right;  // unimodular, left * a * right = diag(factors)
};
SmithDecomposition smith_normal_form_with_transforms(IntMatrix a);

// For primitive r (gcd 1): an (n-1) x n integer matrix whose rows are a
// lattice basis of { z : z . r = 0 }, built by completing r to a unimodular
// matrix. Throws if gcd(r) != 1.
IntMatrix integer_kernel_basis(const IntVector& r);

// Unique solution x of a x = b for a with full column rank; nullopt if the
// system is inconsistent. Exact rational elimination.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

}  // namespace arith
