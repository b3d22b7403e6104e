#pragma once

#include <Eigen/Core>

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "arith/matrix.hpp"

namespace arith {

// Vertex labels are strings; the canonical order between labels is
// lexicographic, while vector indexing follows the graph's vertex list.
using VertexId = std::string;

struct EdgeSpec {
    VertexId u;
    VertexId v;
    int multiplicity = 1;
};

// Undirected loop-free multigraph. Immutable after build(); all operations
// below return new graphs.
class Multigraph {
public:
    // Throws InvalidInput on duplicate labels, loops, unknown endpoints, or
    // non-positive multiplicities.
    static Multigraph build(const std::vector<VertexId>& vertices,
                            const std::vector<EdgeSpec>& edges);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<VertexId>& vertices() const { return labels_; }
    const VertexId& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    bool has_vertex(const VertexId& v) const { return index_.count(v) > 0; }
    int index_of(const VertexId& v) const;

    int multiplicity(int i, int j) const { return mult_(i, j); }
    int degree(int i) const;  // sum of incident edge multiplicities
    IntVector degree_vector() const;
    std::vector<int> neighbors(int i) const;
    int edge_count() const;  // total multiplicity over unordered pairs

    // Edges as (i, j, mult) with i < j, ordered by index pair.
    std::vector<EdgeSpec> edge_list() const;

private:
    std::vector<VertexId> labels_;
    std::unordered_map<VertexId, int> index_;
    Eigen::MatrixXi mult_;
};

struct BlockDecomposition {
    // Vertex sets of the blocks (maximal 2-connected subgraphs or bridge
    // edges), each sorted lexicographically; the list itself is sorted too.
    std::vector<std::vector<VertexId>> blocks;
    std::vector<VertexId> cut_vertices;  // sorted lexicographically
};

bool is_connected(const Multigraph& g);

// Articulation points and blocks by DFS; throws on disconnected input.
BlockDecomposition blocks_and_cut_vertices(const Multigraph& g);

bool is_cut_vertex(const Multigraph& g, const VertexId& v);

// Induced subgraph on the given vertices (original labels kept).
Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& keep);

Multigraph delete_vertex(const Multigraph& g, const VertexId& v);

// Connected components of g - v, each as a sorted index list into g,
// ordered by smallest member label.
std::vector<std::vector<int>> components_without(const Multigraph& g, int v);

struct WedgeResult {
    Multigraph graph;
    // Per-factor label maps into the wedge; both anchors map to the merged
    // vertex. Kept separate because the factors may reuse labels.
    std::map<VertexId, VertexId> left_names;
    std::map<VertexId, VertexId> right_names;
    VertexId merged;
};

// Identifies v1 in g1 with v2 in g2. Vertices of g2 other than v2 are
// renamed with `prefix` to keep labels unique; the merged vertex keeps v1's
// label.
WedgeResult wedge(const Multigraph& g1, const VertexId& v1, const Multigraph& g2,
                  const VertexId& v2, const std::string& prefix = "2:");

}  // namespace arith
