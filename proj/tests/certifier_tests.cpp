#include <random>

#include "doctest.h"
#include "flagbetti/bounds.hpp"
#include "flagbetti/certifier.hpp"
#include "flagbetti/constructions.hpp"
#include "flagbetti/error.hpp"
#include "flagbetti/homology.hpp"
#include "support.hpp"

using namespace flagbetti;

namespace {

std::int64_t ind(const Graph& g) { return total_reduced_betti(g, FieldSpec::gf(2), Setting::Independence); }

bool has_isolated(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

} // namespace

TEST_CASE("fold on a triangle") {
    const FoldStep s = fold_step(construct(family::Complete{3}), 0, {1, 2});
    CHECK(s.removed_sizes == std::vector<int>{3, 3});
    REQUIRE(s.children.size() == 2);
    for (const auto& c : s.children) CHECK(c.order() == 0);
}

TEST_CASE("fold on C5") {
    const FoldStep s = fold_step(construct(family::Cycle{5}), 0, {1, 4});
    CHECK(s.removed_sizes == std::vector<int>{3, 4});
    CHECK(s.children[0].order() == 2);
    CHECK(s.children[1].order() == 1);
    CHECK(ind(s.children[0]) + ind(s.children[1]) >= ind(construct(family::Cycle{5})));
}

TEST_CASE("fold sizes on triangle-free graphs") {
    // Neighbors of v are pairwise non-adjacent, so branch i removes exactly deg(v_i) + i vertices.
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Graph g = testing::random_graph(rng, 9, 0.3);
        if (contains_induced(g, construct(family::Complete{3}))) continue;
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) == 0) continue;
            const auto order = default_neighbor_order(g, v);
            const FoldStep s = fold_step(g, v, order);
            for (std::size_t i = 0; i < order.size(); ++i) {
                CHECK(s.removed_sizes[i] == g.degree(order[i]) + 1 + static_cast<int>(i));
            }
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("fold argument errors") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(fold_step(g, 2, {}), ArgumentError);
    CHECK_THROWS_AS(fold_step(g, 0, {2}), ArgumentError);
    CHECK_THROWS_AS(fold_step(g, 0, {1, 1}), ArgumentError);
    CHECK_NOTHROW(fold_step(g, 0, {1}));
}

TEST_CASE("split children") {
    const Graph c6 = construct(family::Cycle{6});
    const SplitStep s = single_vertex_split(c6, 0);
    CHECK(s.without_vertex.order() == 5);
    CHECK(s.without_neighborhood.order() == 3);
    CHECK(ind(c6) <= ind(s.without_vertex) + ind(s.without_neighborhood));
}

TEST_CASE("small certificates") {
    const Graph two_triangles = construct(copies(family::Complete{3}, 2));
    CHECK(certify(two_triangles).bound() == 4);
    for (int base : {4, 5, 6}) {
        CertifyConfig cfg;
        cfg.base_size = base;
        CHECK(certify(construct(family::Cycle{5}), cfg).bound() == 1);
    }
}

TEST_CASE("TC9 certificate") {
    const BoundCertificate cert = certify(construct(family::TriangularCycle{9}));
    CHECK(cert.bound() <= 7);
    CHECK(replay_certificate(cert).empty());
    CHECK(static_cast<double>(cert.bound()) <= theorem_bound(bound::TCBound{9}).value + 1e-9);
}

TEST_CASE("triangular path fold recursion") {
    for (int n = 5; n <= 14; ++n) {
        const Graph tp = construct(family::TriangularPath{n});
        const FoldStep s = fold_step(tp, n - 1, {n - 2, n - 3});
        CHECK(s.removed_sizes == std::vector<int>{4, 5});
        CHECK(canonical_form(s.children[0]) == canonical_form(construct(family::TriangularPath{n - 4})));
        CHECK(canonical_form(s.children[1]) == canonical_form(construct(family::TriangularPath{n - 5})));
    }
}

TEST_CASE("triangular cycle double split") {
    for (int n = 9; n <= 14; ++n) {
        const Graph tc = construct(family::TriangularCycle{n});
        const SplitStep outer = single_vertex_split(tc, n - 1);
        const SplitStep inner = single_vertex_split(outer.without_vertex, n - 2);
        CHECK(isomorphic(inner.without_vertex, construct(family::TriangularPath{n - 2})));
        CHECK(isomorphic(inner.without_neighborhood, construct(family::TriangularPath{n - 5})));
        CHECK(isomorphic(outer.without_neighborhood, construct(family::TriangularPath{n - 5})));
        CHECK(ind(tc) <= ind(inner.without_vertex) + ind(inner.without_neighborhood) + ind(outer.without_neighborhood));
    }
}

TEST_CASE("soundness on all small graphs") {
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const Graph g = testing::labeled_graph(n, mask);
            CertifyConfig cfg;
            cfg.base_size = 3;
            const BoundCertificate cert = certify(g, cfg);
            REQUIRE(replay_certificate(cert).empty());
            CHECK(cert.bound() >= ind(g));
        }
    }
}

TEST_CASE("soundness on random graphs") {
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> order(7, 12);
        std::uniform_real_distribution<double> density(0.15, 0.7);
        const Graph g = testing::random_graph(rng, order(rng), density(rng));
        for (auto strategy : {CertifyConfig::Strategy::Default, CertifyConfig::Strategy::TryAllOrders}) {
            CertifyConfig cfg;
            cfg.strategy = strategy;
            const BoundCertificate cert = certify(g, cfg);
            REQUIRE(replay_certificate(cert).empty());
            CHECK(cert.bound() >= ind(g));
        }
    }
}

TEST_CASE("try-all-orders never loses to the default") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = testing::random_graph(rng, 10, 0.35);
        CertifyConfig all;
        all.strategy = CertifyConfig::Strategy::TryAllOrders;
        CHECK(certify(g, all).bound() <= certify(g).bound());
    }
}

TEST_CASE("replay rejects tampering") {
    BoundCertificate cert = certify(construct(family::TriangularCycle{10}));
    REQUIRE(replay_certificate(cert).empty());

    BoundCertificate lowered = cert;
    lowered.nodes[lowered.root].bound -= 1;
    CHECK_FALSE(replay_certificate(lowered).empty());

    BoundCertificate bad_leaf = cert;
    for (auto& node : bad_leaf.nodes)
        if (node.kind == CertNode::Kind::Leaf && node.leaf_reason == "homology") {
            node.bound += 1;
            break;
        }
    CHECK_FALSE(replay_certificate(bad_leaf).empty());

    BoundCertificate wrong_vertices = cert;
    for (auto& node : wrong_vertices.nodes)
        if (node.kind != CertNode::Kind::Leaf) {
            node.vertices = VertexSet{};
            break;
        }
    CHECK_FALSE(replay_certificate(wrong_vertices).empty());
}

TEST_CASE("certificates are deterministic") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = testing::random_graph(rng, 11, 0.4);
        const BoundCertificate a = certify(g);
        const BoundCertificate b = certify(g);
        REQUIRE(a.nodes.size() == b.nodes.size());
        CHECK(a.bound() == b.bound());
        for (std::size_t i = 0; i < a.nodes.size(); ++i) {
            CHECK(a.nodes[i].vertices == b.nodes[i].vertices);
            CHECK(a.nodes[i].order == b.nodes[i].order);
            CHECK(a.nodes[i].children == b.nodes[i].children);
        }
    }
}

TEST_CASE("isolated vertices give zero") {
    Graph g = construct(family::Cycle{5});
    g = disjoint_union(g, Graph(1));
    REQUIRE(has_isolated(g));
    CertifyConfig cfg;
    cfg.base_size = 2;
    const BoundCertificate cert = certify(g, cfg);
    CHECK(cert.bound() == 0);
    CHECK(replay_certificate(cert).empty());
}
