#include "arith/extend.hpp"

#include <algorithm>
#include <set>

#include "arith/egyptian.hpp"
#include "arith/errors.hpp"

namespace arith {

namespace {

struct Attachment {
    std::vector<Int> values;   // d of the new vertices, outward from the anchor
    std::vector<Int> weights;  // their r before rescaling
    Int anchor_weight;         // r at the anchor in the attachment's own scale
    bool is_path = false;      // star: all adjacent to anchor; path: a chain
};

Attachment star_attachment(const Rat& q, EgyptianStrategy strategy) {
    Attachment att;
    att.values = strategy == EgyptianStrategy::Greedy ? sylvester_greedy(q)
                                                      : repeat_denominator(q);
    Int c(1);
    for (const Int& a : att.values) c = lcm(c, a);
    att.anchor_weight = c;
    for (const Int& a : att.values) att.weights.push_back(c / a);
    return att;
}

Attachment path_attachment(const Rat& q) {
    Attachment att;
    att.is_path = true;
    if (q == Rat(1)) {
        // Degenerate expansion: a single unit leaf already contributes 1.
        att.values = {Int(1)};
        att.weights = {Int(1)};
        att.anchor_weight = 1;
        return att;
    }
    att.values = hirzebruch_jung(q.reciprocal());

    // Contribution of each path vertex into its predecessor, computed from
    // the far end: t_k = 1/v_k, t_j = 1/(v_j - t_{j+1}); then t_1 = q.
    size_t k = att.values.size();
    std::vector<Rat> t(k);
    t[k - 1] = Rat(Int(1), att.values[k - 1]);
    for (size_t j = k - 1; j-- > 0;) t[j] = (Rat(att.values[j]) - t[j + 1]).reciprocal();

    std::vector<Rat> ratio(k);  // r of path vertex j relative to the anchor
    Rat acc(1);
    for (size_t j = 0; j < k; ++j) {
        acc *= t[j];
        ratio[j] = acc;
    }
    Int c(1);
    for (const Rat& a : ratio) c = lcm(c, a.den());
    att.anchor_weight = c;
    for (const Rat& a : ratio) att.weights.push_back(a.num() * (c / a.den()));
    return att;
}

VertexId fresh_label(const std::set<VertexId>& taken, const VertexId& anchor,
                     const char* kind, int ordinal) {
    VertexId base = anchor + "." + kind + std::to_string(ordinal);
    VertexId candidate = base;
    int bump = 0;
    while (taken.count(candidate)) candidate = base + "'" + std::to_string(++bump);
    return candidate;
}

Extension extend_impl(const Multigraph& g, const RationalStructure& s, bool use_path,
                      EgyptianStrategy strategy) {
    VerifyReport rep = verify_rational(g, s);
    if (!rep.valid())
        throw InvalidInput("extension requires a valid rational structure");

    std::vector<VertexId> labels = g.vertices();
    std::vector<EdgeSpec> edges = g.edge_list();
    std::set<VertexId> taken(labels.begin(), labels.end());
    std::vector<Rat> d(labels.size());
    std::vector<Int> r(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
        d[i] = s.d(static_cast<Eigen::Index>(i));
        r[i] = s.r(static_cast<Eigen::Index>(i));
    }

    Extension out;
    std::vector<VertexId> anchors = s.relaxed;
    std::sort(anchors.begin(), anchors.end());
    for (const VertexId& u : anchors) {
        size_t ui = static_cast<size_t>(g.index_of(u));
        if (d[ui].is_integer()) continue;  // nothing to repair
        Rat q = Rat(1) - d[ui].frac();

        Attachment att =
            use_path ? path_attachment(q) : star_attachment(q, strategy);

        Int l = lcm(r[ui], att.anchor_weight);
        Int scale_old = l / r[ui];
        Int scale_att = l / att.anchor_weight;
        if (scale_old > 1)
            for (Int& entry : r) entry *= scale_old;

        VertexId previous = u;
        for (size_t j = 0; j < att.values.size(); ++j) {
            VertexId fresh =
                fresh_label(taken, u, att.is_path ? "p" : "s", static_cast<int>(j) + 1);
            taken.insert(fresh);
            labels.push_back(fresh);
            out.added.push_back(fresh);
            d.push_back(Rat(att.values[j]));
            r.push_back(att.weights[j] * scale_att);
            edges.push_back({att.is_path ? previous : u, fresh, 1});
            previous = fresh;
        }
        d[ui] += q;  // now the integer floor(d_u) + 1
    }

    out.graph = Multigraph::build(labels, edges);
    RatVector dv(static_cast<Eigen::Index>(d.size()));
    IntVector rv(static_cast<Eigen::Index>(r.size()));
    for (size_t i = 0; i < d.size(); ++i) {
        dv(static_cast<Eigen::Index>(i)) = d[i];
        rv(static_cast<Eigen::Index>(i)) = r[i];
    }
    out.structure = as_arithmetical(RationalStructure{std::move(dv), std::move(rv), {}});
    VerifyReport check = verify(out.graph, out.structure);
    if (!check.valid()) throw InternalError("extension produced an invalid structure");
    return out;
}

}  // namespace

Extension extend_star(const Multigraph& g, const RationalStructure& s,
                      EgyptianStrategy strategy) {
    return extend_impl(g, s, false, strategy);
}

Extension extend_path(const Multigraph& g, const RationalStructure& s) {
    return extend_impl(g, s, true, EgyptianStrategy::Greedy);
}

}  // namespace arith
