#pragma once

#include <string>
#include <vector>

#include "arith/graph.hpp"

namespace arith {

// Standard small graphs with labels v1, v2, ... (center c, leaves l1..lm for
// stars). Used by the enumerators' canonical forms and throughout the tests.

inline Multigraph path_graph(int n) {
    std::vector<VertexId> vs;
    std::vector<EdgeSpec> es;
    for (int i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
    for (int i = 1; i < n; ++i) es.push_back({vs[i - 1], vs[i], 1});
    return Multigraph::build(vs, es);
}

inline Multigraph cycle_graph(int n) {
    std::vector<VertexId> vs;
    std::vector<EdgeSpec> es;
    for (int i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
    for (int i = 1; i < n; ++i) es.push_back({vs[i - 1], vs[i], 1});
    es.push_back({vs[n - 1], vs[0], 1});
    return Multigraph::build(vs, es);
}

inline Multigraph star_graph(int m) {
    std::vector<VertexId> vs{"c"};
    std::vector<EdgeSpec> es;
    for (int i = 1; i <= m; ++i) {
        vs.push_back("l" + std::to_string(i));
        es.push_back({"c", vs.back(), 1});
    }
    return Multigraph::build(vs, es);
}

inline Multigraph complete_graph(int n) {
    std::vector<VertexId> vs;
    std::vector<EdgeSpec> es;
    for (int i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({vs[i], vs[j], 1});
    return Multigraph::build(vs, es);
}

}  // namespace arith
