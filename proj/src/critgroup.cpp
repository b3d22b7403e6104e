#include "arith/critgroup.hpp"

#include "arith/errors.hpp"
#include "arith/linalg.hpp"

namespace arith {

GroupInvariants critical_group(const Multigraph& g, const ArithmeticalStructure& s) {
    VerifyReport rep = verify(g, s);
    if (!rep.valid()) throw InvalidInput("critical_group requires a valid structure");

    int n = g.size();
    if (n == 1) return {};

    IntMatrix basis = integer_kernel_basis(s.r);  // (n-1) x n

    // Every row of L lies in ker(r^T); solve basis^T y = row^T for its
    // coordinates, which are integers because the basis spans the whole
    // lattice.
    RatMatrix bt(n, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n - 1; ++j) bt(i, j) = Rat(basis(j, i));

    RatMatrix lap = laplacian(g, s.d);
    IntMatrix coords(n, n - 1);
    for (int i = 0; i < n; ++i) {
        RatVector row(n);
        for (int j = 0; j < n; ++j) row(j) = lap(i, j);
        auto y = solve(bt, row);
        if (!y) throw InternalError("Laplacian row not in the kernel lattice");
        for (int j = 0; j < n - 1; ++j) {
            if (!(*y)(j).is_integer())
                throw InternalError("non-integral coordinates over the kernel basis");
            coords(i, j) = (*y)(j).num();
        }
    }

    GroupInvariants out;
    for (const Int& f : smith_normal_form(std::move(coords))) {
        if (f == 0) throw InternalError("critical group is not finite");
        if (f > 1) out.factors.push_back(f);
    }
    return out;
}

Int group_order(const GroupInvariants& inv) {
    Int order(1);
    for (const Int& f : inv.factors) order *= f;
    return order;
}

Int tree_order_formula(const Multigraph& g, const ArithmeticalStructure& s) {
    if (!is_connected(g) || g.edge_count() != g.size() - 1)
        throw InvalidInput("tree_order_formula requires a tree");
    VerifyReport rep = verify(g, s);
    if (!rep.valid()) throw InvalidInput("tree_order_formula requires a valid structure");

    Rat product(1);
    for (int v = 0; v < g.size(); ++v) {
        int e = g.degree(v) - 2;
        Rat rv(s.r(v));
        for (int k = 0; k < e; ++k) product *= rv;
        for (int k = 0; k > e; --k) product /= rv;
    }
    if (!product.is_integer() || !product.is_positive())
        throw InternalError("tree order product is not a positive integer: " + product.str());
    return product.num();
}

Int spanning_tree_count(const Multigraph& g) {
    int n = g.size();
    if (n <= 1) return Int(1);
    IntMatrix reduced(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            reduced(i - 1, j - 1) = (i == j) ? Int(g.degree(i)) : Int(-g.multiplicity(i, j));
    return det(std::move(reduced));
}

}  // namespace arith
