#include <cstdlib>
#include <functional>

#include "doctest.h"
#include "flagbetti/constructions.hpp"
#include "flagbetti/error.hpp"
#include "flagbetti/homology.hpp"
#include "flagbetti/search.hpp"
#include "rank.hpp"
#include "support.hpp"

using namespace flagbetti;

namespace {

const std::vector<FieldSpec>& fields() {
    static const std::vector<FieldSpec> f{FieldSpec::gf(2), FieldSpec::gf(3), FieldSpec::gf(5), FieldSpec::rationals()};
    return f;
}

std::int64_t ind(const Graph& g, const FieldSpec& f = FieldSpec::gf(2)) {
    return total_reduced_betti(g, f, Setting::Independence);
}

std::vector<std::size_t> fvec(const Graph& g) { return build_flag_complex(g).f_vector(); }

} // namespace

TEST_CASE("field specs") {
    CHECK(FieldSpec::parse("gf2") == FieldSpec::gf(2));
    CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("gf5").characteristic() == 5);
    CHECK(FieldSpec::rationals().characteristic() == 0);
    CHECK_THROWS_AS(FieldSpec::parse("gf4"), ArgumentError);
    CHECK_THROWS_AS(FieldSpec::parse("r"), ArgumentError);
    CHECK_THROWS_AS(FieldSpec::gf(65537), ArgumentError);
    CHECK(parse_setting("clique") == Setting::Clique);
    CHECK_THROWS_AS(parse_setting("cliques"), ArgumentError);
}

TEST_CASE("f-vectors") {
    CHECK(fvec(construct(family::Complete{4})) == std::vector<std::size_t>{4, 6, 4, 1});
    CHECK(fvec(construct(family::Cycle{5})) == std::vector<std::size_t>{5, 5});
    CHECK(fvec(construct(family::TriangularCycle{6})) == std::vector<std::size_t>{6, 12, 8});
    CHECK(fvec(Graph(0)).empty());
    CHECK(build_flag_complex(construct(family::Complete{6}), 1).f_vector() == std::vector<std::size_t>{6, 15});
}

TEST_CASE("flag complexes are closed cliques, sorted and duplicate-free") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 60; ++i) {
        const Graph g = testing::random_graph(rng, 4 + i % 9, 0.6);
        const FlagComplex cx = build_flag_complex(g);
        for (std::size_t d = 0; d < cx.faces.size(); ++d) {
            const auto& layer = cx.faces[d];
            CHECK(std::is_sorted(layer.begin(), layer.end()));
            CHECK(std::adjacent_find(layer.begin(), layer.end()) == layer.end());
            for (std::uint64_t f : layer) {
                CHECK(std::popcount(f) == static_cast<int>(d) + 1);
                for (int v : VertexSet{f}) CHECK((VertexSet{f} - VertexSet::single(v)).subset_of(g.closed_neighbors(v) - VertexSet::single(v)));
                if (d == 0) continue;
                for (int v : VertexSet{f})
                    CHECK(std::binary_search(cx.faces[d - 1].begin(), cx.faces[d - 1].end(),
                                             f & ~(std::uint64_t{1} << v)));
            }
        }
    }
}

TEST_CASE("face guard") {
    ::setenv("BETTI_MAX_FACES", "100", 1);
    CHECK(max_faces() == 100);
    CHECK_THROWS_AS(build_flag_complex(construct(family::Complete{8})), ResourceError);
    CHECK_NOTHROW(build_flag_complex(construct(family::Cycle{20})));
    ::unsetenv("BETTI_MAX_FACES");
    CHECK(max_faces() == (std::size_t{1} << 26));
}

TEST_CASE("named graph values") {
    struct Case {
        FamilySpec spec;
        std::int64_t value;
    };
    const std::vector<Case> cases{
        {family::Complete{5}, 4},          {family::CompleteMultipartite{{3, 3}}, 1},
        {family::TriangularPath{0}, 1},    {family::TriangularPath{1}, 0},
        {family::TriangularPath{2}, 1},    {family::TriangularPath{3}, 2},
        {family::TriangularPath{4}, 2},    {family::TriangularCycle{6}, 2},
        {family::TriangularCycle{7}, 1},   {family::TriangularCycle{8}, 5},
        {family::C5StarI3{}, 2},           {family::Icosahedron{}, 7},
    };
    for (const auto& c : cases)
        for (const auto& f : fields()) CHECK(ind(construct(c.spec), f) == c.value);
    CHECK(ind(Graph(0)) == 1);
    const BettiVector ico = betti_of(construct(family::Icosahedron{}));
    CHECK(ico.at(1) == 6);
    CHECK(ico.at(2) == 1);
    CHECK(betti_of(disjoint_union(construct(family::Complete{3}), construct(family::Complete{3}))).total() == 4);
}

TEST_CASE("augmentation and Euler characteristic") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
        const Graph g = testing::random_graph(rng, i % 11, 0.5);
        const FlagComplex cx = build_flag_complex(g);
        const BettiVector b = betti(cx, fields()[i % 4]);
        CHECK(b.at(-1) == (g.order() == 0 ? 1 : 0));
        std::int64_t sum = 0;
        for (auto x : b.reduced) sum += x;
        CHECK(b.total() == sum);
        std::int64_t chi = -1;
        const auto f = cx.f_vector();
        for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(f[d]);
        std::int64_t alt = 0;
        for (int d = -1; d < static_cast<int>(b.reduced.size()) - 1; ++d) alt += ((d + 2) % 2 ? -1 : 1) * b.at(d);
        CHECK(chi == alt);
    }
}

TEST_CASE("Kunneth multiplicativity") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        const int a = i % 6;
        const Graph g = testing::random_graph(rng, a, 0.5);
        const Graph h = testing::random_graph(rng, std::min(10 - a, i % 7), 0.5);
        const auto& f = fields()[i % 4];
        CHECK(ind(disjoint_union(g, h), f) == ind(g, f) * ind(h, f));
    }
}

TEST_CASE("Mayer-Vietoris inequality on every vertex") {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 150; ++i) {
        const Graph g = testing::random_graph(rng, 1 + i % 8, 0.45);
        for (int v = 0; v < g.order(); ++v)
            CHECK(ind(g) <= ind(remove_set(g, VertexSet::single(v))) + ind(remove_set(g, g.closed_neighbors(v))));
    }
}

TEST_CASE("cone vanishing") {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 200; ++i) {
        const Graph g = disjoint_union(testing::random_graph(rng, i % 9, 0.5), Graph(1));
        for (const auto& f : fields()) CHECK(ind(g, f) == 0);
    }
}

TEST_CASE("field independence on every graph with at most 8 vertices") {
    for (int n = 0; n <= 8; ++n)
        for (const Graph& g : enumerate_hfree(n, HPattern::none())) {
            const auto ref = betti_of(g, fields()[0]).reduced;
            for (std::size_t f = 1; f < fields().size(); ++f) REQUIRE(betti_of(g, fields()[f]).reduced == ref);
        }
}

TEST_CASE("complete multipartite identity") {
    std::function<void(std::vector<int>&, int, int)> walk = [&](std::vector<int>& parts, int left, int cap) {
        if (!parts.empty()) {
            std::int64_t product = 1;
            for (int p : parts) product *= p - 1;
            CHECK(total_reduced_betti(construct(family::CompleteMultipartite{parts}), FieldSpec::gf(2),
                                      Setting::Clique) == product);
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            parts.push_back(p);
            walk(parts, left - p, p);
            parts.pop_back();
        }
    };
    std::vector<int> parts;
    walk(parts, 10, 10);
}

TEST_CASE("rank kernels agree on integer matrices") {
    using detail::SparseEntry;
    using detail::SparseMatrix;
    CHECK(detail::rank_rational(SparseMatrix{2, {{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}}}) == 2);
    CHECK(detail::rank_gf2(SparseMatrix{2, {{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}}}) == 1);

    std::mt19937_64 rng(26);
    std::uniform_int_distribution<int> entry(-1, 1);
    for (int trial = 0; trial < 20; ++trial) {
        const int size = 20 + trial;
        const int independent_rows = size - trial % 5;
        std::vector<std::vector<int>> dense;
        for (int r = 0; r < independent_rows; ++r) {
            std::vector<int> row(size);
            for (auto& x : row) x = entry(rng);
            dense.push_back(row);
        }
        for (int r = independent_rows; r < size; ++r) {
            std::vector<int> row(size);
            for (int c = 0; c < size; ++c) row[c] = dense[r - independent_rows][c] - dense[r - independent_rows + 1][c];
            dense.push_back(row);
        }
        SparseMatrix m{static_cast<std::size_t>(size), {}};
        for (const auto& row : dense) {
            std::vector<SparseEntry> sparse;
            for (int c = 0; c < size; ++c)
                if (row[c]) sparse.push_back({static_cast<std::uint32_t>(c), static_cast<std::int8_t>(row[c])});
            m.rows.push_back(sparse);
        }
        const std::size_t q = detail::rank_rational(m);
        CHECK(q == detail::rank_gfp(m, 65521));
        CHECK(q == detail::rank_gfp(m, 65519));
        CHECK(q <= static_cast<std::size_t>(independent_rows));
    }
}
