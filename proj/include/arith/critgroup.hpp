#pragma once

#include <vector>

#include "arith/structures.hpp"

namespace arith {

// Invariant factor list of a finite abelian group: f1 | f2 | ..., every
// factor >= 2; the empty list is the trivial group.
struct GroupInvariants {
    std::vector<Int> factors;

    bool operator==(const GroupInvariants& o) const { return factors == o.factors; }
};

// The critical group ker(r^T) / im(L(G,d)^T): rows of L are written in the
// coordinates of an integer basis of ker(r^T), and the Smith normal form of
// that coordinate matrix gives the invariant factors.
GroupInvariants critical_group(const Multigraph& g, const ArithmeticalStructure& s);

Int group_order(const GroupInvariants& inv);

// For a tree: product over vertices of r_v^(deg_v - 2), evaluated exactly
// over the rationals. Must come out a positive integer; anything else is an
// internal consistency failure.
Int tree_order_formula(const Multigraph& g, const ArithmeticalStructure& s);

// Spanning tree count by a reduced-Laplacian determinant.
Int spanning_tree_count(const Multigraph& g);

}  // namespace arith
