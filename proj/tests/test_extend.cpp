#include <doctest.h>

#include <random>

#include "arith/enumerate.hpp"
#include "arith/errors.hpp"
#include "arith/egyptian.hpp"
#include "arith/extend.hpp"
#include "arith/json_io.hpp"
#include "arith/families.hpp"
#include "testutil.hpp"

using namespace arith;
using namespace testutil;

namespace {

RationalStructure c4_rational() {
    return {rv({"1/3", "6", "5/3", "9"}), iv({15, 3, 3, 2}), {"v1", "v3"}};
}

Int entry_r(const Extension& ext, const VertexId& v) {
    return ext.structure.r(ext.graph.index_of(v));
}

Int entry_d(const Extension& ext, const VertexId& v) {
    return ext.structure.d(ext.graph.index_of(v));
}

}  // namespace

TEST_CASE("star extension with repeated denominators on the rational 4-cycle") {
    Multigraph c4 = cycle_graph(4);
    Extension ext = extend_star(c4, c4_rational(), EgyptianStrategy::Repeat);

    CHECK(ext.graph.size() == 7);
    CHECK(ext.added == std::vector<VertexId>{"v1.s1", "v1.s2", "v3.s1"});

    // Original cycle: d becomes (1, 6, 2, 9) and r is unchanged.
    CHECK(entry_d(ext, "v1") == 1);
    CHECK(entry_d(ext, "v2") == 6);
    CHECK(entry_d(ext, "v3") == 2);
    CHECK(entry_d(ext, "v4") == 9);
    CHECK(entry_r(ext, "v1") == 15);
    CHECK(entry_r(ext, "v2") == 3);
    CHECK(entry_r(ext, "v3") == 3);
    CHECK(entry_r(ext, "v4") == 2);

    // Two value-3 leaves at v1 with r = 5, one value-3 leaf at v3 with r = 1.
    CHECK(entry_d(ext, "v1.s1") == 3);
    CHECK(entry_d(ext, "v1.s2") == 3);
    CHECK(entry_d(ext, "v3.s1") == 3);
    CHECK(entry_r(ext, "v1.s1") == 5);
    CHECK(entry_r(ext, "v1.s2") == 5);
    CHECK(entry_r(ext, "v3.s1") == 1);

    CHECK(verify(ext.graph, ext.structure).valid());
}

TEST_CASE("path extension on the rational 4-cycle") {
    Multigraph c4 = cycle_graph(4);
    Extension ext = extend_path(c4, c4_rational());

    CHECK(ext.graph.size() == 7);
    CHECK(ext.added == std::vector<VertexId>{"v1.p1", "v1.p2", "v3.p1"});

    CHECK(entry_d(ext, "v1") == 1);
    CHECK(entry_d(ext, "v3") == 2);
    CHECK(entry_r(ext, "v1") == 15);

    // The attached path at v1 carries values 2, 2 with weights 10, 5.
    CHECK(entry_d(ext, "v1.p1") == 2);
    CHECK(entry_d(ext, "v1.p2") == 2);
    CHECK(entry_r(ext, "v1.p1") == 10);
    CHECK(entry_r(ext, "v1.p2") == 5);
    CHECK(ext.graph.multiplicity(ext.graph.index_of("v1"), ext.graph.index_of("v1.p1")) == 1);
    CHECK(ext.graph.multiplicity(ext.graph.index_of("v1.p1"), ext.graph.index_of("v1.p2")) == 1);
    CHECK(ext.graph.multiplicity(ext.graph.index_of("v1"), ext.graph.index_of("v1.p2")) == 0);

    CHECK(entry_d(ext, "v3.p1") == 3);
    CHECK(entry_r(ext, "v3.p1") == 1);

    CHECK(verify(ext.graph, ext.structure).valid());
}

TEST_CASE("greedy star extension also verifies") {
    Multigraph c4 = cycle_graph(4);
    Extension ext = extend_star(c4, c4_rational(), EgyptianStrategy::Greedy);
    // Greedy splits 2/3 into 1/2 + 1/6 at v1.
    CHECK(entry_d(ext, "v1.s1") == 2);
    CHECK(entry_d(ext, "v1.s2") == 6);
    CHECK(entry_d(ext, "v3.s1") == 3);
    CHECK(verify(ext.graph, ext.structure).valid());
}

TEST_CASE("integral input is returned unchanged") {
    Multigraph k3 = complete_graph(3);
    RationalStructure s{rv({"2", "2", "2"}), iv({1, 1, 1}), {"v1"}};
    for (auto strat : {EgyptianStrategy::Greedy, EgyptianStrategy::Repeat}) {
        Extension ext = extend_star(k3, s, strat);
        CHECK(ext.graph.size() == 3);
        CHECK(ext.added.empty());
        CHECK(equal(ext.structure.d, iv({2, 2, 2})));
        CHECK(equal(ext.structure.r, iv({1, 1, 1})));
    }
    Extension ext = extend_path(k3, s);
    CHECK(ext.added.empty());
}

TEST_CASE("extension rejects invalid rational structures") {
    Multigraph c4 = cycle_graph(4);
    RationalStructure bad{rv({"1/3", "6", "5/3", "10"}), iv({15, 3, 3, 2}), {"v1", "v3"}};
    CHECK_THROWS_AS(extend_star(c4, bad, EgyptianStrategy::Repeat), InvalidInput);
    CHECK_THROWS_AS(extend_path(c4, bad), InvalidInput);
}

TEST_CASE("greedy extensions with huge denominators stay exact end to end") {
    // One relaxed vertex with deficit 5/121: its greedy expansion blows up
    // past 64 bits, pushing the r rescale to ~40 digits.
    Multigraph g = Multigraph::build({"u", "w"}, {{"u", "w", 116}});
    RationalStructure s{rv({"116/121", "14036"}), iv({121, 1}), {"u"}};
    REQUIRE(verify_rational(g, s).valid());

    auto expansion = sylvester_greedy(Rat(Int(5), Int(121)));
    REQUIRE(expansion.size() == 5);
    CHECK(expansion[0] == 25);
    CHECK(expansion[1] == 757);
    CHECK(expansion[4] > Int("9223372036854775807"));  // beyond int64

    Extension ext = extend_star(g, s, EgyptianStrategy::Greedy);
    CHECK(ext.graph.size() == 7);
    CHECK(ext.structure.d(ext.graph.index_of("u")) == 1);
    CHECK(verify(ext.graph, ext.structure).valid());
    Int big = ext.structure.r(ext.graph.index_of("u"));
    CHECK(big > Int("9223372036854775807"));

    // JSON keeps exactness by spilling wide integers into strings.
    Json j = to_json(ext.graph, ext.structure);
    bool some_string = false, some_number = false;
    for (const auto& entry : j.at("r")) {
        some_string = some_string || entry.is_string();
        some_number = some_number || entry.is_number_integer();
    }
    CHECK(some_string);
    CHECK(some_number);
    RationalStructure back = structure_from_json(ext.graph, j);
    CHECK(equal(back.r, ext.structure.r));
    CHECK(equal(back.d, to_rational(ext.structure.d)));
}

TEST_CASE("extensions keep d off the relaxed set and preserve r ratios") {
    std::mt19937_64 rng(515);
    int cases = 0;
    for (int trial = 0; trial < 12 && cases < 40; ++trial) {
        Multigraph g = random_cut_vertex_graph(rng, 2 + static_cast<int>(rng() % 2),
                                               2 + static_cast<int>(rng() % 2));
        BlockDecomposition bd = blocks_and_cut_vertices(g);
        Enumeration e = enumerate_structures(g, {Int(8), 2'000'000});
        for (const auto& s : e.structures) {
            if (cases >= 40) break;
            for (const auto& v : bd.cut_vertices) {
                auto parts = split(g, v, s);
                for (const auto& part : parts) {
                    if (cases >= 40) break;
                    ++cases;
                    for (auto mode : {0, 1, 2}) {
                        Extension ext =
                            mode == 2 ? extend_path(part.graph, part.structure)
                                      : extend_star(part.graph, part.structure,
                                                    mode == 0 ? EgyptianStrategy::Greedy
                                                              : EgyptianStrategy::Repeat);
                        CHECK(verify(ext.graph, ext.structure).valid());

                        // d is untouched away from the relaxed anchor.
                        for (int i = 0; i < part.graph.size(); ++i) {
                            const VertexId& label = part.graph.label(i);
                            if (label == v) continue;
                            CHECK(Rat(ext.structure.d(ext.graph.index_of(label))) ==
                                  part.structure.d(i));
                        }
                        // r is a single common rescale of the original.
                        Rat factor(0);
                        for (int i = 0; i < part.graph.size(); ++i) {
                            const VertexId& label = part.graph.label(i);
                            Rat ratio(ext.structure.r(ext.graph.index_of(label)),
                                      part.structure.r(i));
                            if (factor.is_zero())
                                factor = ratio;
                            else
                                CHECK(factor == ratio);
                        }
                    }
                }
            }
        }
    }
    CHECK(cases >= 20);
}
