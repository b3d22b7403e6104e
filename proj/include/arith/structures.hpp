#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arith/graph.hpp"
#include "arith/linalg.hpp"
#include "arith/matrix.hpp"

namespace arith {

// (d, r) with positive integer entries, L(G,d) r = 0, gcd(r) = 1.
struct ArithmeticalStructure {
    IntVector d;
    IntVector r;

    bool operator==(const ArithmeticalStructure& o) const {
        return equal(d, o.d) && equal(r, o.r);
    }
};

// Same, but d may be a positive rational on the relaxed vertices.
struct RationalStructure {
    RatVector d;
    IntVector r;
    std::vector<VertexId> relaxed;  // sorted lexicographically

    bool operator==(const RationalStructure& o) const {
        return equal(d, o.d) && equal(r, o.r) && relaxed == o.relaxed;
    }
};

RationalStructure as_rational(const ArithmeticalStructure& s);
// Throws InvalidInput unless every entry of d is integral.
ArithmeticalStructure as_arithmetical(const RationalStructure& s);

enum class Condition {
    Positivity,   // every d and r entry > 0
    Integrality,  // d integral outside the relaxed set, r integral by type
    Kernel,       // L(G,d) r = 0
    Gcd,          // gcd of r entries = 1
};

const char* condition_name(Condition c);

struct VerifyReport {
    std::vector<Condition> failed;
    std::vector<std::string> details;
    bool valid() const { return failed.empty(); }
};

VerifyReport verify(const Multigraph& g, const RatVector& d, const IntVector& r);
VerifyReport verify(const Multigraph& g, const ArithmeticalStructure& s);
VerifyReport verify_rational(const Multigraph& g, const std::vector<VertexId>& relaxed,
                             const RatVector& d, const IntVector& r);
VerifyReport verify_rational(const Multigraph& g, const RationalStructure& s);

// Primitive positive kernel generator of L(G,d), if the kernel is a positive
// line; the r determined by d.
std::optional<IntVector> r_from_d(const Multigraph& g, const RatVector& d);

// d_v = (sum_u m_uv r_u) / r_v when every division is exact and positive.
std::optional<IntVector> d_from_r(const Multigraph& g, const IntVector& r);

struct GlueFactor {
    Multigraph graph;
    VertexId vertex;
    RationalStructure structure;  // relaxed set must be a subset of {vertex}
};

struct GlueResult {
    Multigraph graph;
    std::map<VertexId, VertexId> left_names;   // factor label -> wedge label
    std::map<VertexId, VertexId> right_names;  // (right side gets a prefix)
    VertexId merged;
    RationalStructure structure;  // relaxed = {merged} iff d there is fractional
};

// d adds at the merged vertex, r is rescaled by lcm of the two anchor
// entries; the result is an arithmetical structure iff d at the merge is
// integral (then structure.relaxed is empty).
GlueResult glue(const GlueFactor& left, const GlueFactor& right);

struct SplitPart {
    Multigraph graph;  // induced subgraph on component + {v}, original labels
    RationalStructure structure;  // relaxed = {v}
};

// One v-rational factor per component of g - v; compose_at inverts this
// exactly.
std::vector<SplitPart> split(const Multigraph& g, const VertexId& v,
                             const ArithmeticalStructure& s);

// Inverse of split: parts live on subgraphs of g sharing exactly the vertex
// v; d entries add at v, each part's r is rescaled by l / r_part(v) with
// l = lcm of the anchor entries.
RationalStructure compose_at(const Multigraph& g, const VertexId& v,
                             const std::vector<SplitPart>& parts);

struct DetIdentity {
    Rat lhs;
    Rat rhs;
    bool holds() const { return lhs == rhs; }
};

// Splitting identity for the generalized Laplacian determinant at a cut
// vertex v: with x_v = t1 + t2,
//   det(G) = det(G1 - v) det(G2 @ t2) + det(G2 - v) det(G1 @ t1),
// where G1 is the first component of g - v (plus v) and G2 the rest. The
// entry of x at v is ignored.
DetIdentity det_identity(const Multigraph& g, const VertexId& v, const RatVector& x,
                         const Rat& t1, const Rat& t2);

}  // namespace arith
