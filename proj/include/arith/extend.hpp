#pragma once

#include <vector>

#include "arith/structures.hpp"

namespace arith {

enum class EgyptianStrategy { Greedy, Repeat };

struct Extension {
    Multigraph graph;  // induced supergraph: original vertices plus new ones
    ArithmeticalStructure structure;
    std::vector<VertexId> added;  // in attachment order
};

// Turns an anchor-rational structure into an arithmetical one on a
// supergraph by attaching, at each relaxed vertex u with fractional d_u, a
// star of new leaves whose values are a unit-fraction expansion of
// 1 - frac(d_u); d_u becomes floor(d_u) + 1 and every other d entry is kept.
// New leaves at u are labelled "<u>.s1", "<u>.s2", ...
Extension extend_star(const Multigraph& g, const RationalStructure& s,
                      EgyptianStrategy strategy);

// Same contract, but attaches a path whose values are the negative continued
// fraction digits of 1 / (1 - frac(d_u)); labels "<u>.p1" (adjacent to u),
// "<u>.p2", ...
Extension extend_path(const Multigraph& g, const RationalStructure& s);

}  // namespace arith
