#include <doctest.h>

#include <random>

#include "arith/enumerate.hpp"
#include "arith/errors.hpp"
#include "arith/families.hpp"
#include "arith/graph.hpp"
#include "testutil.hpp"

using namespace arith;
using namespace testutil;

TEST_CASE("build validates its input") {
    Multigraph p2 = Multigraph::build({"a", "b"}, {{"a", "b", 1}});
    CHECK(p2.size() == 2);
    CHECK(p2.multiplicity(0, 1) == 1);

    Multigraph k3 = Multigraph::build({"1", "2", "3"}, {{"1", "2", 1}, {"2", "3", 1}, {"1", "3", 1}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.degree(0) == 2);

    CHECK_THROWS_AS(Multigraph::build({"a", "b"}, {{"a", "a", 1}}), InvalidInput);
    CHECK_THROWS_AS(Multigraph::build({"a", "a"}, {}), InvalidInput);
    CHECK_THROWS_AS(Multigraph::build({"a"}, {{"a", "z", 1}}), InvalidInput);
    CHECK_THROWS_AS(Multigraph::build({"a", "b"}, {{"a", "b", 0}}), InvalidInput);
}

TEST_CASE("parallel edges accumulate multiplicity") {
    Multigraph g = Multigraph::build({"a", "b"}, {{"a", "b", 2}, {"a", "b", 1}});
    CHECK(g.multiplicity(0, 1) == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(0) == 3);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(complete_graph(3)));
    CHECK(is_connected(cycle_graph(4)));
    CHECK_FALSE(is_connected(Multigraph::build({"a", "b"}, {})));
}

TEST_CASE("blocks and cut vertices of the wedge of two triangles") {
    BlockDecomposition bd = blocks_and_cut_vertices(k3_wedge_k3());
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0] == std::vector<VertexId>{"v", "x1", "x2"});
    CHECK(bd.blocks[1] == std::vector<VertexId>{"v", "y1", "y2"});
    CHECK(bd.cut_vertices == std::vector<VertexId>{"v"});
}

TEST_CASE("every tree edge is its own block and internal vertices cut") {
    Multigraph t = six_vertex_tree();
    BlockDecomposition bd = blocks_and_cut_vertices(t);
    CHECK(bd.blocks.size() == 5);
    CHECK(bd.cut_vertices == std::vector<VertexId>{"a", "r"});
}

TEST_CASE("a 2-connected graph is a single block") {
    BlockDecomposition bd = blocks_and_cut_vertices(complete_graph(3));
    CHECK(bd.blocks.size() == 1);
    CHECK(bd.cut_vertices.empty());
    CHECK_THROWS_AS(blocks_and_cut_vertices(Multigraph::build({"a", "b"}, {})), InvalidInput);
}

TEST_CASE("wedge identifies the anchors and preserves edges") {
    Multigraph k3a = complete_graph(3);
    WedgeResult w = wedge(k3a, "v1", complete_graph(3), "v1");
    CHECK(w.graph.size() == 5);
    CHECK(w.graph.edge_count() == 6);
    CHECK(w.merged == "v1");
    CHECK(w.left_names.at("v2") == "v2");
    CHECK(w.right_names.at("v2") == "2:v2");
    CHECK(w.right_names.at("v1") == "v1");
    CHECK(w.graph.has_vertex("2:v2"));
    CHECK(is_cut_vertex(w.graph, "v1"));

    BlockDecomposition bd = blocks_and_cut_vertices(w.graph);
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.cut_vertices == std::vector<VertexId>{"v1"});

    WedgeResult p3 = wedge(path_graph(2), "v2", path_graph(2), "v1");
    CHECK(p3.graph.size() == 3);
    CHECK(p3.graph.edge_count() == 2);

    CHECK_THROWS_AS(wedge(k3a, "zz", complete_graph(3), "v1"), InvalidInput);
}

TEST_CASE("wedge of a star at a leaf gives the six-vertex tree shape") {
    // S2 center glued onto a leaf of S3.
    Multigraph s3 = star_graph(3);
    Multigraph s2 = star_graph(2);
    WedgeResult w = wedge(s3, "l1", s2, "c");
    CHECK(w.graph.size() == 6);
    CHECK(is_tree(w.graph));
    BlockDecomposition bd = blocks_and_cut_vertices(w.graph);
    CHECK(bd.blocks.size() == 5);
}

TEST_CASE("delete_vertex takes induced subgraphs") {
    Multigraph k3 = complete_graph(3);
    Multigraph p2 = delete_vertex(k3, "v1");
    CHECK(p2.size() == 2);
    CHECK(p2.edge_count() == 1);

    Multigraph mid = delete_vertex(path_graph(3), "v2");
    CHECK(mid.size() == 2);
    CHECK(mid.edge_count() == 0);

    Multigraph p3 = delete_vertex(cycle_graph(4), "v1");
    CHECK(p3.size() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(is_connected(p3));

    CHECK_THROWS_AS(delete_vertex(k3, "nope"), InvalidInput);
}

TEST_CASE("deleting a cut vertex disconnects, deleting others does not") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        Multigraph g = random_cut_vertex_graph(rng, 3 + static_cast<int>(rng() % 3),
                                               3 + static_cast<int>(rng() % 3));
        BlockDecomposition bd = blocks_and_cut_vertices(g);
        std::set<VertexId> cuts(bd.cut_vertices.begin(), bd.cut_vertices.end());
        REQUIRE(!cuts.empty());
        for (const auto& v : g.vertices()) {
            if (g.size() <= 2) continue;
            Multigraph rest = delete_vertex(g, v);
            CHECK(is_connected(rest) == !cuts.count(v));
        }
    }
}

TEST_CASE("wedge edge counts add") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        Multigraph g = random_cut_vertex_graph(rng, 4, 4);
        CHECK(is_connected(g));
    }
    Multigraph a = cycle_graph(4);
    Multigraph b = complete_graph(4);
    WedgeResult w = wedge(a, "v2", b, "v3");
    CHECK(w.graph.edge_count() == a.edge_count() + b.edge_count());
    CHECK(w.graph.size() == a.size() + b.size() - 1);
}
