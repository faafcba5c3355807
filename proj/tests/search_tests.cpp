#include <random>
#include <set>

#include "doctest.h"
#include "flagbetti/error.hpp"
#include "flagbetti/search.hpp"
#include "support.hpp"

using namespace flagbetti;

namespace {

std::vector<std::uint64_t> level_counts(int max_n, const HPattern& h, const EnumerateOptions& opts = {}) {
    std::vector<std::uint64_t> counts;
    enumerate_levels(max_n, h, opts, [&](const LevelStats& s, const std::vector<std::string>& words) {
        CHECK(s.graphs == words.size());
        counts.push_back(s.graphs);
    });
    return counts;
}

SearchOptions search(int n, const std::string& forbid) {
    SearchOptions o;
    o.max_n = n;
    o.forbid = HPattern::parse(forbid);
    return o;
}

} // namespace

TEST_CASE("isomorphism class counts") {
    CHECK(level_counts(7, HPattern::none()) == std::vector<std::uint64_t>{1, 1, 2, 4, 11, 34, 156, 1044});
    CHECK(level_counts(4, HPattern::parse("C4")).back() == 10);
    CHECK(level_counts(3, HPattern::parse("K3")).back() == 3);
    CHECK(level_counts(8, HPattern::parse("K3")) == std::vector<std::uint64_t>{1, 1, 2, 3, 7, 14, 38, 107, 410});
    CHECK(level_counts(7, HPattern::parse("K4")).back() == 685);
}

TEST_CASE("levels are canonical, distinct and H-free") {
    const Graph c4 = construct(family::Cycle{4});
    for (int n = 0; n <= 6; ++n) {
        const auto graphs = enumerate_hfree(n, HPattern::parse("C4"));
        std::set<std::string> words;
        for (const Graph& g : graphs) {
            CHECK(g.order() == n);
            CHECK(canonical_form(g) == g);
            CHECK_FALSE(testing::brute_contains_induced(g, c4));
            words.insert(emit_graph6(g));
        }
        CHECK(words.size() == graphs.size());
    }
}

TEST_CASE("pruning loses no H-free class") {
    // Every labeled C4-free graph on n <= 6 vertices must be isomorphic to a listed one.
    const HPattern h = HPattern::parse("C4");
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> listed;
        for (const Graph& g : enumerate_hfree(n, h)) listed.insert(emit_graph6(g));
        std::set<std::string> seen;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const Graph g = testing::labeled_graph(n, mask);
            if (contains_induced(g, *h.graph())) continue;
            seen.insert(emit_graph6(canonical_form(g)));
        }
        CHECK(seen == listed);
    }
}

TEST_CASE("small extremal values") {
    const SearchReport all = extremal_betti(search(5, "none"));
    REQUIRE(all.level(5));
    CHECK(*all.level(5)->exact_max == 4);
    CHECK(all.level(5)->witnesses.front() == emit_graph6(construct(family::Independent{5})));

    const SearchReport c4 = extremal_betti(search(4, "C4"));
    CHECK(*c4.level(4)->exact_max == 3);
    CHECK(*c4.level(4)->cumulative_max == 3);

    const SearchReport k3 = extremal_betti(search(5, "K3"));
    CHECK(*k3.level(5)->exact_max == 4);
    CHECK(*k3.level(0)->exact_max == 1);
    CHECK(*k3.level(1)->cumulative_max == 1);
}

TEST_CASE("every witness attains the maximum") {
    SearchOptions o = search(6, "K4");
    o.setting = Setting::Independence;
    const SearchReport r = extremal_betti(o);
    for (const auto& l : r.levels) {
        REQUIRE(l.exact_max);
        CHECK_FALSE(l.witnesses.empty());
        CHECK(l.witnesses.size() <= o.witness_limit);
        CHECK(std::is_sorted(l.witnesses.begin(), l.witnesses.end()));
        for (const auto& w : l.witnesses)
            CHECK(total_reduced_betti(parse_graph6(w), o.field, o.setting) == *l.exact_max);
    }
}

TEST_CASE("monotonicity") {
    for (const char* forbid : {"none", "K3", "C4", "K4"}) {
        const SearchReport r = extremal_betti(search(6, forbid));
        CHECK(check_monotonicity(r).ok);
    }

    SearchReport fake;
    for (int n = 0; n <= 3; ++n) {
        LevelReport l;
        l.n = n;
        l.exact_max = n == 2 ? 5 : 1;
        l.witnesses = {"A_"};
        fake.levels.push_back(l);
    }
    const MonotonicityResult m = check_monotonicity(fake);
    CHECK_FALSE(m.ok);
    CHECK(m.violation_at == 2);
    CHECK(m.detail.find("A_") != std::string::npos);

    SearchReport single;
    single.levels.push_back(LevelReport{});
    single.levels.back().n = 4;
    single.levels.back().exact_max = 2;
    CHECK(check_monotonicity(single).ok);
}

TEST_CASE("fields agree at desk scale") {
    SearchOptions o = search(6, "none");
    o.all_fields = true;
    const SearchReport r = extremal_betti(o);
    CHECK(r.fields_agree());
    CHECK(r.level(6)->field_maxima.size() == 4);
}

TEST_CASE("results do not depend on worker count") {
    SearchOptions one = search(7, "K4");
    one.enumeration.workers = 1;
    SearchOptions many = one;
    many.enumeration.workers = 4;
    const SearchReport a = extremal_betti(one);
    const SearchReport b = extremal_betti(many);
    REQUIRE(a.levels.size() == b.levels.size());
    for (std::size_t i = 0; i < a.levels.size(); ++i) {
        CHECK(a.levels[i].exact_max == b.levels[i].exact_max);
        CHECK(a.levels[i].witnesses == b.levels[i].witnesses);
        CHECK(a.levels[i].graphs_enumerated == b.levels[i].graphs_enumerated);
        CHECK(a.levels[i].graphs_pruned == b.levels[i].graphs_pruned);
    }
}

TEST_CASE("degeneracy filter") {
    EnumerateOptions o;
    o.max_degeneracy = 1;
    // Forests: 1, 1, 2, 3, 6, 10 unlabeled forests on 0..5 vertices.
    CHECK(level_counts(5, HPattern::none(), o) == std::vector<std::uint64_t>{1, 1, 2, 3, 6, 10});
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(extremal_betti(search(10, "none")), ResourceError);
    CHECK_THROWS_AS(enumerate_hfree(-1, HPattern::none()), ArgumentError);
    EnumerateOptions big;
    big.allow_large = true;
    CHECK_THROWS_AS(enumerate_hfree(64, HPattern::none(), big), CapacityError);
}

TEST_CASE("scoring an external corpus") {
    std::vector<Graph> corpus{construct(family::Cycle{4}), construct(family::Independent{4}),
                              construct(family::Complete{4}), construct(family::Cycle{5})};
    const SearchReport r = score_corpus(corpus, search(0, "C4"));
    CHECK(r.from_file);
    REQUIRE(r.level(4));
    CHECK(r.level(4)->graphs_pruned == 1);
    CHECK(r.level(4)->graphs_enumerated == 2);
    CHECK(*r.level(4)->exact_max == 3);
    CHECK(*r.level(5)->exact_max == 1);
    CHECK(*r.level(5)->cumulative_max == 3);
}

TEST_CASE("pattern parsing") {
    CHECK(HPattern::parse("none").is_none());
    CHECK(HPattern::parse("K4").graph()->order() == 4);
    CHECK(HPattern::parse("I3").graph()->edges().empty());
    CHECK(HPattern::parse("graph6:Bw").graph()->order() == 3);
    CHECK_THROWS_AS(HPattern::parse("K0"), ArgumentError);
    CHECK_THROWS_AS(HPattern::parse("K11"), ArgumentError);
    CHECK_THROWS_AS(HPattern::parse("Q3"), ArgumentError);
    CHECK_THROWS_AS(HPattern::parse("graph6:"), ParseError);
    CHECK_THROWS(HPattern::parse("graph6:!!"));
}
