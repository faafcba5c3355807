#include "flagbetti/search.hpp"

#include <algorithm>
#include <set>

#include "flagbetti/error.hpp"
#include "parallel.hpp"

namespace flagbetti {

HPattern HPattern::named(FamilySpec spec) {
    HPattern h;
    Graph g = construct(spec);
    if (g.order() == 0 || g.order() > 10) throw ArgumentError("forbidden pattern must have 1..10 vertices");
    h.value_ = std::move(spec);
    h.graph_ = std::move(g);
    return h;
}

HPattern HPattern::explicit_graph(Graph g) {
    if (g.order() == 0 || g.order() > 10) throw ArgumentError("forbidden pattern must have 1..10 vertices");
    HPattern h;
    h.graph_ = g;
    h.value_ = std::move(g);
    return h;
}

HPattern HPattern::parse(const std::string& text) {
    if (text == "none" || text.empty()) return none();
    if (text.rfind("graph6:", 0) == 0) return explicit_graph(parse_graph6(text.substr(7)));
    if (text.size() >= 2 && std::all_of(text.begin() + 1, text.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        text.size() <= 4) {
        const int k = std::stoi(text.substr(1));
        switch (text[0]) {
        case 'K': return named(family::Complete{k});
        case 'I': return named(family::Independent{k});
        case 'C': return named(family::Cycle{k});
        case 'P': return named(family::Path{k});
        default: break;
        }
    }
    throw ArgumentError("unknown pattern '" + text + "' (expected none, K<d>, I<k>, C<n>, P<n> or graph6:<word>)");
}

std::string HPattern::describe() const {
    if (is_none()) return "none";
    if (auto* f = std::get_if<FamilySpec>(&value_)) return flagbetti::describe(*f);
    return "graph6:" + emit_graph6(*graph_);
}

namespace {

struct ParentResult {
    std::vector<std::string> children;
    std::uint64_t pruned = 0;
};

// Canonical augmentation: a child G = P + v is kept only if deleting the
// vertex in G's last canonical position gives P's class again. Children of one
// parent are deduplicated by canonical code; distinct parents cannot produce
// the same class.
ParentResult extend_parent(const std::string& parent_word, const HPattern& h, const EnumerateOptions& opts) {
    ParentResult out;
    const Graph parent = parse_graph6(parent_word);
    const int m = parent.order();
    const int n = m + 1;
    std::set<std::string> seen;
    Graph child(n);
    for (auto [u, v] : parent.edges()) child.add_edge(u, v);
    const std::uint64_t subsets = std::uint64_t{1} << m;
    for (std::uint64_t s = 0; s < subsets; ++s) {
        for (int u = 0; u < m; ++u) child.remove_edge(u, m);
        for (int u : VertexSet{s}) child.add_edge(u, m);
        if (h.graph() && contains_induced_through(child, *h.graph(), m)) {
            ++out.pruned;
            continue;
        }
        if (opts.max_degeneracy && degeneracy(child) > *opts.max_degeneracy) {
            ++out.pruned;
            continue;
        }
        const CanonicalLabeling lab = canonical_labeling(child);
        const int last = lab.order[n - 1];
        bool accept = last == m;
        if (!accept) {
            for (const auto& gen : lab.automorphisms)
                if (gen[last] == m) {
                    accept = true;
                    break;
                }
        }
        if (!accept) accept = emit_graph6(canonical_form(remove_set(child, VertexSet::single(last)))) == parent_word;
        if (!accept) continue;
        seen.insert(emit_graph6(lab.canonical));
    }
    out.children.assign(seen.begin(), seen.end());
    return out;
}

} // namespace

void enumerate_levels(int max_n, const HPattern& h, const EnumerateOptions& opts,
                      const std::function<void(const LevelStats&, const std::vector<std::string>&)>& visit) {
    if (max_n < 0) throw ArgumentError("enumeration order must be nonnegative");
    if (max_n > kDeskScaleLimit && !opts.allow_large)
        throw ResourceError("enumeration beyond " + std::to_string(kDeskScaleLimit) +
                            " vertices needs the allow-large override");
    if (max_n >= Graph::kMaxVertices) throw CapacityError("enumeration order too large");

    std::vector<std::string> level{emit_graph6(Graph(0))};
    visit(LevelStats{0, 1, 0}, level);
    for (int n = 1; n <= max_n; ++n) {
        std::vector<ParentResult> results(level.size());
        detail::parallel_for(level.size(), opts.workers,
                             [&](std::size_t i) { results[i] = extend_parent(level[i], h, opts); });
        std::vector<std::string> next;
        LevelStats stats{n, 0, 0};
        for (auto& r : results) {
            stats.pruned += r.pruned;
            next.insert(next.end(), std::make_move_iterator(r.children.begin()),
                        std::make_move_iterator(r.children.end()));
        }
        std::sort(next.begin(), next.end());
        stats.graphs = next.size();
        level = std::move(next);
        visit(stats, level);
    }
}

std::vector<Graph> enumerate_hfree(int n, const HPattern& h, const EnumerateOptions& opts) {
    std::vector<Graph> out;
    enumerate_levels(n, h, opts, [&](const LevelStats& stats, const std::vector<std::string>& words) {
        if (stats.n != n) return;
        out.reserve(words.size());
        for (const auto& w : words) out.push_back(parse_graph6(w));
    });
    return out;
}

const LevelReport* SearchReport::level(int n) const {
    for (const auto& l : levels)
        if (l.n == n) return &l;
    return nullptr;
}

bool SearchReport::fields_agree() const {
    for (const auto& l : levels) {
        if (l.field_maxima.empty()) continue;
        const auto first = l.field_maxima.begin()->second;
        for (const auto& [name, v] : l.field_maxima)
            if (v != first) return false;
    }
    return true;
}

namespace {

const std::vector<FieldSpec>& all_fields() {
    static const std::vector<FieldSpec> fields{FieldSpec::gf(2), FieldSpec::gf(3), FieldSpec::gf(5),
                                               FieldSpec::rationals()};
    return fields;
}

struct Scored {
    std::int64_t value = 0;
    std::vector<std::int64_t> per_field;
};

// Scores graphs (given as graph6 words) and folds them into one level.
LevelReport score_level(int n, const std::vector<std::string>& words, const SearchOptions& opts) {
    LevelReport rep;
    rep.n = n;
    rep.graphs_enumerated = words.size();
    std::vector<Scored> scores(words.size());
    detail::parallel_for(words.size(), opts.enumeration.workers, [&](std::size_t i) {
        const Graph g = parse_graph6(words[i]);
        scores[i].value = total_reduced_betti(g, opts.field, opts.setting);
        if (opts.all_fields)
            for (const auto& f : all_fields())
                scores[i].per_field.push_back(f == opts.field ? scores[i].value
                                                              : total_reduced_betti(g, f, opts.setting));
    });
    std::set<std::string> witnesses;
    for (std::size_t i = 0; i < words.size(); ++i) {
        const auto v = scores[i].value;
        if (!rep.exact_max || v > *rep.exact_max) {
            rep.exact_max = v;
            witnesses.clear();
        }
        if (v == *rep.exact_max) {
            witnesses.insert(words[i]);
            if (witnesses.size() > opts.witness_limit) witnesses.erase(std::prev(witnesses.end()));
        }
        for (std::size_t f = 0; f < scores[i].per_field.size(); ++f) {
            const auto name = all_fields()[f].name();
            auto [it, fresh] = rep.field_maxima.emplace(name, scores[i].per_field[f]);
            if (!fresh) it->second = std::max(it->second, scores[i].per_field[f]);
        }
    }
    rep.witnesses.assign(witnesses.begin(), witnesses.end());
    return rep;
}

void fill_cumulative(SearchReport& report) {
    std::optional<std::int64_t> running;
    for (auto& l : report.levels) {
        if (l.exact_max && (!running || *l.exact_max > *running)) running = l.exact_max;
        l.cumulative_max = running;
    }
}

} // namespace

SearchReport extremal_betti(const SearchOptions& opts) {
    SearchReport report;
    report.pattern = opts.forbid.describe();
    report.setting = opts.setting;
    report.field = opts.field;
    enumerate_levels(opts.max_n, opts.forbid, opts.enumeration,
                     [&](const LevelStats& stats, const std::vector<std::string>& words) {
                         LevelReport l = score_level(stats.n, words, opts);
                         l.graphs_pruned = stats.pruned;
                         report.levels.push_back(std::move(l));
                     });
    fill_cumulative(report);
    return report;
}

SearchReport score_corpus(const std::vector<Graph>& graphs, const SearchOptions& opts) {
    SearchReport report;
    report.pattern = opts.forbid.describe();
    report.setting = opts.setting;
    report.field = opts.field;
    report.from_file = true;
    std::map<int, std::vector<std::string>> by_order;
    std::map<int, std::uint64_t> pruned;
    for (const Graph& g : graphs) {
        const bool excluded = (opts.forbid.graph() && contains_induced(g, *opts.forbid.graph())) ||
                              (opts.enumeration.max_degeneracy && degeneracy(g) > *opts.enumeration.max_degeneracy);
        if (excluded)
            ++pruned[g.order()];
        else
            by_order[g.order()].push_back(emit_graph6(g));
        by_order.try_emplace(g.order());
    }
    for (auto& [n, words] : by_order) {
        LevelReport l = score_level(n, words, opts);
        l.graphs_pruned = pruned[n];
        report.levels.push_back(std::move(l));
    }
    fill_cumulative(report);
    return report;
}

MonotonicityResult check_monotonicity(const SearchReport& report) {
    MonotonicityResult out;
    const LevelReport* prev = nullptr;
    for (const auto& l : report.levels) {
        if (l.n < 1) continue;
        if (prev && prev->n + 1 == l.n && prev->exact_max && l.exact_max && *prev->exact_max > *l.exact_max) {
            out.ok = false;
            out.violation_at = prev->n;
            out.detail = "b=(" + std::to_string(prev->n) + ") = " + std::to_string(*prev->exact_max) + " > b=(" +
                         std::to_string(l.n) + ") = " + std::to_string(*l.exact_max);
            if (!prev->witnesses.empty()) out.detail += "; witness " + prev->witnesses.front();
            return out;
        }
        prev = &l;
    }
    return out;
}

} // namespace flagbetti
