#include "arith/structures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "arith/errors.hpp"

namespace arith {

RationalStructure as_rational(const ArithmeticalStructure& s) {
    return RationalStructure{to_rational(s.d), s.r, {}};
}

ArithmeticalStructure as_arithmetical(const RationalStructure& s) {
    IntVector d(s.d.size());
    for (Eigen::Index i = 0; i < s.d.size(); ++i) {
        if (!s.d(i).is_integer())
            throw InvalidInput("structure has a fractional d entry at index " +
                               std::to_string(i));
        d(i) = s.d(i).num();
    }
    return ArithmeticalStructure{std::move(d), s.r};
}

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::Positivity: return "positivity";
        case Condition::Integrality: return "integrality";
        case Condition::Kernel: return "kernel";
        case Condition::Gcd: return "gcd";
    }
    return "?";
}

VerifyReport verify_rational(const Multigraph& g, const std::vector<VertexId>& relaxed,
                             const RatVector& d, const IntVector& r) {
    int n = g.size();
    if (d.size() != n || r.size() != n)
        throw InvalidInput("structure vectors do not match the vertex count");
    std::set<VertexId> u;
    for (const auto& v : relaxed) {
        g.index_of(v);  // validates
        u.insert(v);
    }

    VerifyReport report;
    auto fail = [&](Condition c, const std::string& msg) {
        if (report.failed.empty() || report.failed.back() != c) report.failed.push_back(c);
        report.details.push_back(msg);
    };

    for (int i = 0; i < n; ++i) {
        if (!d(i).is_positive())
            fail(Condition::Positivity, "d(" + g.label(i) + ") = " + d(i).str() + " is not positive");
        if (r(i) <= 0)
            fail(Condition::Positivity, "r(" + g.label(i) + ") = " + r(i).get_str() + " is not positive");
    }
    for (int i = 0; i < n; ++i) {
        if (!d(i).is_integer() && !u.count(g.label(i)))
            fail(Condition::Integrality,
                 "d(" + g.label(i) + ") = " + d(i).str() + " must be an integer");
    }
    RatVector residue = apply(laplacian(g, d), to_rational(r));
    for (int i = 0; i < n; ++i) {
        if (!residue(i).is_zero()) {
            fail(Condition::Kernel, "row " + g.label(i) + " of L(G,d) r is " + residue(i).str());
        }
    }
    Int gc = vector_gcd(r);
    if (gc != 1) fail(Condition::Gcd, "gcd of r entries is " + gc.get_str());

    // Deduplicate condition tags while keeping order.
    std::vector<Condition> uniq;
    for (auto c : report.failed)
        if (std::find(uniq.begin(), uniq.end(), c) == uniq.end()) uniq.push_back(c);
    report.failed = std::move(uniq);
    return report;
}

VerifyReport verify_rational(const Multigraph& g, const RationalStructure& s) {
    return verify_rational(g, s.relaxed, s.d, s.r);
}

VerifyReport verify(const Multigraph& g, const RatVector& d, const IntVector& r) {
    return verify_rational(g, {}, d, r);
}

VerifyReport verify(const Multigraph& g, const ArithmeticalStructure& s) {
    return verify_rational(g, {}, to_rational(s.d), s.r);
}

std::optional<IntVector> r_from_d(const Multigraph& g, const RatVector& d) {
    if (d.size() != g.size()) throw InvalidInput("d does not match the vertex count");
    return kernel_vector(laplacian(g, d));
}

std::optional<IntVector> d_from_r(const Multigraph& g, const IntVector& r) {
    int n = g.size();
    if (r.size() != n) throw InvalidInput("r does not match the vertex count");
    IntVector d(n);
    for (int v = 0; v < n; ++v) {
        Int total(0);
        for (int u : g.neighbors(v)) total += Int(g.multiplicity(u, v)) * r(u);
        if (total <= 0) return std::nullopt;
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), total.get_mpz_t(), r(v).get_mpz_t());
        if (rem != 0) return std::nullopt;
        d(v) = q;
    }
    return d;
}

namespace {

void require_glue_factor(const GlueFactor& f, const char* side) {
    f.graph.index_of(f.vertex);
    for (const auto& u : f.structure.relaxed)
        if (u != f.vertex)
            throw InvalidInput(std::string(side) +
                               " glue factor is relaxed away from its anchor vertex");
    VerifyReport rep = verify_rational(f.graph, {f.vertex}, f.structure.d, f.structure.r);
    if (!rep.valid()) {
        std::ostringstream msg;
        msg << side << " glue factor is not a valid anchor-rational structure:";
        for (const auto& detail : rep.details) msg << " " << detail << ";";
        throw InvalidInput(msg.str());
    }
}

}  // namespace

RationalStructure compose_at(const Multigraph& g, const VertexId& v,
                             const std::vector<SplitPart>& parts) {
    int vi = g.index_of(v);
    if (parts.empty()) throw InvalidInput("compose_at needs at least one part");

    Int l(1);
    for (const auto& p : parts) l = lcm(l, p.structure.r(p.graph.index_of(v)));

    int n = g.size();
    RatVector d(n);
    IntVector r(n);
    std::vector<bool> assigned(n, false);
    Rat dv(0);
    std::set<VertexId> relaxed_off_v;

    for (const auto& p : parts) {
        int pv = p.graph.index_of(v);
        Int scale = l / p.structure.r(pv);
        dv += p.structure.d(pv);
        for (const auto& u : p.structure.relaxed)
            if (u != v) relaxed_off_v.insert(u);
        for (int i = 0; i < p.graph.size(); ++i) {
            if (i == pv) continue;
            int gi = g.index_of(p.graph.label(i));
            if (assigned[gi])
                throw InvalidInput("parts overlap at vertex '" + p.graph.label(i) + "'");
            assigned[gi] = true;
            d(gi) = p.structure.d(i);
            r(gi) = scale * p.structure.r(i);
        }
    }
    for (int i = 0; i < n; ++i)
        if (i != vi && !assigned[i])
            throw InvalidInput("parts do not cover vertex '" + g.label(i) + "'");
    d(vi) = dv;
    r(vi) = l;

    if (vector_gcd(r) != 1) throw InternalError("composed r is not primitive");

    RationalStructure out{std::move(d), std::move(r), {}};
    if (!dv.is_integer()) relaxed_off_v.insert(v);
    out.relaxed.assign(relaxed_off_v.begin(), relaxed_off_v.end());
    return out;
}

GlueResult glue(const GlueFactor& left, const GlueFactor& right) {
    require_glue_factor(left, "left");
    require_glue_factor(right, "right");

    WedgeResult w = wedge(left.graph, left.vertex, right.graph, right.vertex);

    auto relabel = [&](const GlueFactor& f, const std::map<VertexId, VertexId>& names) {
        SplitPart part;
        std::vector<VertexId> labels;
        for (const auto& u : f.graph.vertices()) labels.push_back(names.at(u));
        std::vector<EdgeSpec> edges;
        for (const auto& e : f.graph.edge_list())
            edges.push_back({names.at(e.u), names.at(e.v), e.multiplicity});
        part.graph = Multigraph::build(labels, edges);
        part.structure = f.structure;
        part.structure.relaxed.clear();
        for (const auto& u : f.structure.relaxed) part.structure.relaxed.push_back(names.at(u));
        return part;
    };

    GlueResult out;
    out.structure = compose_at(w.graph, w.merged,
                               {relabel(left, w.left_names), relabel(right, w.right_names)});
    out.graph = std::move(w.graph);
    out.left_names = std::move(w.left_names);
    out.right_names = std::move(w.right_names);
    out.merged = std::move(w.merged);
    return out;
}

std::vector<SplitPart> split(const Multigraph& g, const VertexId& v,
                             const ArithmeticalStructure& s) {
    int vi = g.index_of(v);
    VerifyReport rep = verify(g, s);
    if (!rep.valid()) throw InvalidInput("split requires a valid arithmetical structure");
    auto comps = components_without(g, vi);
    if (comps.size() < 2) throw InvalidInput("'" + v + "' is not a cut vertex");

    std::vector<SplitPart> parts;
    for (const auto& comp : comps) {
        std::vector<int> keep = comp;
        keep.push_back(vi);
        std::sort(keep.begin(), keep.end());
        SplitPart part;
        part.graph = induced_subgraph(g, keep);
        int pn = part.graph.size();
        int pv = part.graph.index_of(v);

        // The anchor's d share is what this component contributes to row v.
        Int contribution(0);
        for (int u : comp) contribution += Int(g.multiplicity(u, vi)) * s.r(u);

        RatVector d(pn);
        IntVector r(pn);
        for (int i = 0; i < pn; ++i) {
            int gi = g.index_of(part.graph.label(i));
            d(i) = (i == pv) ? Rat(contribution, s.r(vi)) : Rat(s.d(gi));
            r(i) = s.r(gi);
        }
        part.structure = RationalStructure{std::move(d), primitive_part(std::move(r)), {v}};
        parts.push_back(std::move(part));
    }
    return parts;
}

DetIdentity det_identity(const Multigraph& g, const VertexId& v, const RatVector& x,
                         const Rat& t1, const Rat& t2) {
    int vi = g.index_of(v);
    if (x.size() != g.size()) throw InvalidInput("assignment does not match the vertex count");
    auto comps = components_without(g, vi);
    if (comps.size() < 2) throw InvalidInput("'" + v + "' is not a cut vertex");

    std::vector<int> side1 = comps.front();
    std::vector<int> side2;
    for (size_t c = 1; c < comps.size(); ++c)
        side2.insert(side2.end(), comps[c].begin(), comps[c].end());

    auto with_vertex = [&](std::vector<int> side) {
        side.push_back(vi);
        std::sort(side.begin(), side.end());
        return induced_subgraph(g, side);
    };
    Multigraph g1 = with_vertex(side1);
    Multigraph g2 = with_vertex(side2);

    auto restricted = [&](const Multigraph& h, const Rat& at_v) {
        RatVector y(h.size());
        for (int i = 0; i < h.size(); ++i) {
            const VertexId& lbl = h.label(i);
            y(i) = (lbl == v) ? at_v : x(g.index_of(lbl));
        }
        return y;
    };

    RatVector full(g.size());
    for (int i = 0; i < g.size(); ++i) full(i) = (i == vi) ? t1 + t2 : x(i);

    Multigraph g1v = delete_vertex(g1, v);
    Multigraph g2v = delete_vertex(g2, v);

    DetIdentity out;
    out.lhs = det(laplacian(g, full));
    out.rhs = det(laplacian(g1v, restricted(g1v, Rat(0)))) * det(laplacian(g2, restricted(g2, t2))) +
              det(laplacian(g2v, restricted(g2v, Rat(0)))) * det(laplacian(g1, restricted(g1, t1)));
    return out;
}

}  // namespace arith
