#include "arith/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "arith/errors.hpp"

namespace arith {

Multigraph Multigraph::build(const std::vector<VertexId>& vertices,
                             const std::vector<EdgeSpec>& edges) {
    Multigraph g;
    g.labels_ = vertices;
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (!g.index_.emplace(vertices[i], static_cast<int>(i)).second)
            throw InvalidInput("duplicate vertex label: '" + vertices[i] + "'");
    }
    int n = g.size();
    g.mult_ = Eigen::MatrixXi::Zero(n, n);
    for (const auto& e : edges) {
        auto iu = g.index_.find(e.u);
        auto iv = g.index_.find(e.v);
        if (iu == g.index_.end()) throw InvalidInput("edge endpoint not a vertex: '" + e.u + "'");
        if (iv == g.index_.end()) throw InvalidInput("edge endpoint not a vertex: '" + e.v + "'");
        if (iu->second == iv->second)
            throw InvalidInput("loop edge at vertex '" + e.u + "' is not allowed");
        if (e.multiplicity <= 0)
            throw InvalidInput("edge multiplicity must be positive");
        g.mult_(iu->second, iv->second) += e.multiplicity;
        g.mult_(iv->second, iu->second) += e.multiplicity;
    }
    return g;
}

int Multigraph::index_of(const VertexId& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw InvalidInput("unknown vertex: '" + v + "'");
    return it->second;
}

int Multigraph::degree(int i) const {
    int d = 0;
    for (int j = 0; j < size(); ++j) d += mult_(i, j);
    return d;
}

IntVector Multigraph::degree_vector() const {
    IntVector d(size());
    for (int i = 0; i < size(); ++i) d(i) = degree(i);
    return d;
}

std::vector<int> Multigraph::neighbors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (mult_(i, j) > 0) out.push_back(j);
    return out;
}

int Multigraph::edge_count() const {
    int total = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j) total += mult_(i, j);
    return total;
}

std::vector<EdgeSpec> Multigraph::edge_list() const {
    std::vector<EdgeSpec> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (mult_(i, j) > 0) out.push_back({label(i), label(j), mult_(i, j)});
    return out;
}

bool is_connected(const Multigraph& g) {
    int n = g.size();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

BlockDecomposition blocks_and_cut_vertices(const Multigraph& g) {
    if (!is_connected(g)) throw InvalidInput("block decomposition requires a connected graph");
    int n = g.size();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::set<int>> block_sets;
    std::set<int> cut_set;
    int timer = 0;

    // Parallel edges do not affect vertex connectivity, so the DFS runs on
    // the simple skeleton.
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int w : g.neighbors(v)) {
            if (w == parent) continue;
            if (disc[w] == -1) {
                ++children;
                edge_stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if ((parent == -1 && children > 1) || (parent != -1 && low[w] >= disc[v])) {
                    cut_set.insert(v);
                }
                if (low[w] >= disc[v]) {
                    // v closes off a block; pop its edges.
                    std::set<int> block;
                    while (!edge_stack.empty()) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        block.insert(e.first);
                        block.insert(e.second);
                        if (e == std::make_pair(v, w)) break;
                    }
                    block_sets.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    if (n > 0) dfs(0, -1);

    BlockDecomposition out;
    for (const auto& block : block_sets) {
        std::vector<VertexId> labels;
        for (int v : block) labels.push_back(g.label(v));
        std::sort(labels.begin(), labels.end());
        out.blocks.push_back(std::move(labels));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    for (int v : cut_set) out.cut_vertices.push_back(g.label(v));
    std::sort(out.cut_vertices.begin(), out.cut_vertices.end());
    return out;
}

bool is_cut_vertex(const Multigraph& g, const VertexId& v) {
    int vi = g.index_of(v);
    return components_without(g, vi).size() > 1;
}

Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& keep) {
    std::vector<VertexId> labels;
    labels.reserve(keep.size());
    for (int i : keep) labels.push_back(g.label(i));
    std::vector<EdgeSpec> edges;
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = a + 1; b < keep.size(); ++b)
            if (g.multiplicity(keep[a], keep[b]) > 0)
                edges.push_back({labels[a], labels[b], g.multiplicity(keep[a], keep[b])});
    return Multigraph::build(labels, edges);
}

Multigraph delete_vertex(const Multigraph& g, const VertexId& v) {
    int vi = g.index_of(v);
    std::vector<int> keep;
    for (int i = 0; i < g.size(); ++i)
        if (i != vi) keep.push_back(i);
    return induced_subgraph(g, keep);
}

std::vector<std::vector<int>> components_without(const Multigraph& g, int v) {
    int n = g.size();
    std::vector<int> comp(n, -1);
    comp[v] = -2;
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b : g.neighbors(a)) {
                if (comp[b] == -1) {
                    comp[b] = next;
                    stack.push_back(b);
                }
            }
        }
        ++next;
    }
    std::vector<std::vector<int>> groups(next);
    for (int i = 0; i < n; ++i)
        if (comp[i] >= 0) groups[comp[i]].push_back(i);
    auto min_label = [&](const std::vector<int>& group) {
        const VertexId* best = &g.label(group.front());
        for (int i : group)
            if (g.label(i) < *best) best = &g.label(i);
        return *best;
    };
    std::sort(groups.begin(), groups.end(),
              [&](const auto& a, const auto& b) { return min_label(a) < min_label(b); });
    return groups;
}

WedgeResult wedge(const Multigraph& g1, const VertexId& v1, const Multigraph& g2,
                  const VertexId& v2, const std::string& prefix) {
    g1.index_of(v1);
    int v2i = g2.index_of(v2);

    WedgeResult out;
    out.merged = v1;
    std::vector<VertexId> labels = g1.vertices();
    for (const auto& u : g1.vertices()) out.left_names[u] = u;
    for (const auto& u : g2.vertices()) {
        if (u == v2) {
            out.right_names[u] = v1;
        } else {
            out.right_names[u] = prefix + u;
            labels.push_back(prefix + u);
        }
    }
    std::vector<EdgeSpec> edges = g1.edge_list();
    for (const auto& e : g2.edge_list())
        edges.push_back({out.right_names[e.u], out.right_names[e.v], e.multiplicity});
    out.graph = Multigraph::build(labels, edges);
    (void)v2i;
    return out;
}

}  // namespace arith
