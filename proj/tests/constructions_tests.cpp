#include "doctest.h"
#include "flagbetti/constructions.hpp"
#include "flagbetti/error.hpp"
#include "support.hpp"

using namespace flagbetti;

TEST_CASE("simple families") {
    CHECK(construct(family::Complete{5}).edge_count() == 10);
    CHECK(construct(family::Independent{4}) == Graph(4));
    CHECK(construct(family::Cycle{6}).edge_count() == 6);
    CHECK(is_regular(construct(family::Cycle{6}), 2));
    CHECK(construct(family::Path{5}).edge_count() == 4);
    CHECK(construct(family::Path{0}).order() == 0);
    CHECK_THROWS_AS(construct(family::Cycle{2}), ArgumentError);
    CHECK_THROWS_AS(construct(family::Complete{65}), CapacityError);
    CHECK_THROWS_AS(construct(family::Independent{-1}), ArgumentError);
}

TEST_CASE("complete multipartite graphs") {
    const Graph k = construct(family::CompleteMultipartite{{3, 2, 2}});
    CHECK(k.order() == 7);
    CHECK(k.edge_count() == 3 * 2 + 3 * 2 + 2 * 2);
    CHECK(complement(k) == disjoint_union(disjoint_union(construct(family::Complete{3}), construct(family::Complete{2})),
                                          construct(family::Complete{2})));
    CHECK_THROWS_AS(construct(family::CompleteMultipartite{{2, 3}}), ArgumentError);
}

TEST_CASE("Turan graphs") {
    CHECK(turan_parts(4, 7) == std::vector<int>{3, 2, 2});
    CHECK(turan_parts(3, 7) == std::vector<int>{4, 3});
    CHECK(turan_parts(2, 5) == std::vector<int>{5});
    const Graph t = construct(family::Turan{4, 7});
    CHECK(isomorphic(complement(t), disjoint_union(disjoint_union(construct(family::Complete{3}),
                                                                  construct(family::Complete{2})),
                                                   construct(family::Complete{2}))));
    for (int d = 2; d <= 5; ++d)
        for (int n = d - 1; n <= 12; ++n) {
            const Graph g = construct(family::Turan{d, n});
            CHECK_FALSE(contains_induced(g, construct(family::Complete{d})));
        }
}

TEST_CASE("triangular paths and cycles") {
    const Graph tc6 = construct(family::TriangularCycle{6});
    CHECK(tc6.edge_count() == 12);
    CHECK(isomorphic(tc6, construct(family::CompleteMultipartite{{2, 2, 2}})));
    for (int n = 6; n <= 20; ++n) {
        const Graph tc = construct(family::TriangularCycle{n});
        CHECK(is_regular(tc, 4));
        CHECK(tc.edge_count() == 2 * n);
        if (n < 9) continue;
        for (int v = 0; v < n; ++v) {
            const Graph nb = induced_subgraph(tc, tc.neighbors(v));
            CHECK((isomorphic(nb, construct(family::Cycle{4})) || isomorphic(nb, construct(family::Path{4}))));
        }
    }
    CHECK_THROWS_AS(construct(family::TriangularCycle{5}), ArgumentError);
    for (int n = 0; n <= 12; ++n) {
        const Graph tp = construct(family::TriangularPath{n});
        CHECK(tp.edge_count() == std::max(0, n - 1) + std::max(0, n - 2));
        if (n >= 1) CHECK(tp.degree(n - 1) == std::min(2, n - 1));
    }
}

TEST_CASE("icosahedron and C5 star I3") {
    const Graph ico = construct(family::Icosahedron{});
    CHECK(ico.order() == 12);
    CHECK(ico.edge_count() == 30);
    CHECK(is_regular(ico, 5));
    for (int v = 0; v < 12; ++v)
        CHECK(isomorphic(induced_subgraph(ico, ico.neighbors(v)), construct(family::Cycle{5})));
    const Graph star = construct(family::C5StarI3{});
    CHECK(star.order() == 8);
    CHECK(is_regular(star, 5));
    CHECK(star == join(construct(family::Cycle{5}), Graph(3)));
    const Graph wheel = construct(family::Wheel5{});
    CHECK(wheel.order() == 6);
    CHECK(wheel.degree(5) == 5);
}

TEST_CASE("disjoint copies") {
    const Graph g = construct(copies(family::Complete{3}, 3));
    CHECK(g.order() == 9);
    CHECK(components(g).size() == 3);
    CHECK(construct(copies(family::Complete{5}, 0)).order() == 0);
    CHECK(describe(copies(family::Complete{4}, 2)) == "2xK_4");
    CHECK_THROWS_AS(construct(copies(family::Complete{5}, 13)), CapacityError);
}

TEST_CASE("projective plane incidence graphs") {
    for (int p : {2, 3, 5}) {
        const Graph g = projective_plane_incidence(p);
        const int q = p * p + p + 1;
        CHECK(g.order() == 2 * q);
        CHECK(g.edge_count() == (p + 1) * q);
        CHECK(is_regular(g, p + 1));
        CHECK(is_bipartite(g));
        CHECK(is_connected(g));
        CHECK(girth(g) == 6);
        // Points come first and only meet lines.
        for (int a = 0; a < q; ++a)
            for (int b = a + 1; b < q; ++b) CHECK_FALSE(g.adjacent(a, b));
    }
    CHECK_FALSE(contains_induced(projective_plane_incidence(2), construct(family::Cycle{4})));
    CHECK_THROWS_AS(projective_plane_incidence(4), ArgumentError);
    CHECK_THROWS_AS(projective_plane_incidence(7), ArgumentError);
}
