#pragma once

// Isomorph-free generation of graphs without an induced copy of a pattern H,
// and exhaustive computation of the extremal Betti function over them.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flagbetti/constructions.hpp"
#include "flagbetti/graph.hpp"
#include "flagbetti/homology.hpp"

namespace flagbetti {

/// The forbidden induced subgraph, if any.
class HPattern {
public:
    struct None {};

    HPattern() = default;
    static HPattern none() { return {}; }
    static HPattern named(FamilySpec spec);
    static HPattern explicit_graph(Graph g);
    /// none | K<d> | I<k> | C<n> | P<n> | graph6:<word>
    static HPattern parse(const std::string& text);

    bool is_none() const { return std::holds_alternative<None>(value_); }
    /// The pattern graph; nullopt for None.
    const std::optional<Graph>& graph() const { return graph_; }
    std::string describe() const;

private:
    std::variant<None, FamilySpec, Graph> value_;
    std::optional<Graph> graph_;
};

inline constexpr int kDeskScaleLimit = 9;

struct EnumerateOptions {
    /// Permit n above kDeskScaleLimit.
    bool allow_large = false;
    /// Hereditary filter: only graphs of degeneracy at most this.
    std::optional<int> max_degeneracy;
    /// 0 picks the hardware concurrency.
    unsigned workers = 0;
};

struct LevelStats {
    int n = 0;
    std::uint64_t graphs = 0;
    /// Extensions rejected for containing H (or failing the degeneracy filter).
    std::uint64_t pruned = 0;
};

/// Calls visit(stats, words) for n = 0..max_n, where `words` holds the
/// graph6 word of one canonical representative per isomorphism class, sorted.
void enumerate_levels(int max_n, const HPattern& h, const EnumerateOptions& opts,
                      const std::function<void(const LevelStats&, const std::vector<std::string>&)>& visit);

/// Representatives of the H-free isomorphism classes on exactly n vertices.
std::vector<Graph> enumerate_hfree(int n, const HPattern& h, const EnumerateOptions& opts = {});

struct SearchOptions {
    int max_n = 6;
    HPattern forbid;
    Setting setting = Setting::Clique;
    FieldSpec field = FieldSpec::gf(2);
    /// Also score over GF(2), GF(3), GF(5) and Q and record each maximum.
    bool all_fields = false;
    EnumerateOptions enumeration;
    std::size_t witness_limit = 10;
};

struct LevelReport {
    int n = 0;
    /// Maximum over graphs on exactly n vertices; nullopt if there are none.
    std::optional<std::int64_t> exact_max;
    /// Maximum over graphs on at most n vertices.
    std::optional<std::int64_t> cumulative_max;
    /// Graph6 words of canonical forms attaining exact_max, smallest first.
    std::vector<std::string> witnesses;
    std::uint64_t graphs_enumerated = 0;
    std::uint64_t graphs_pruned = 0;
    /// Per-field maxima when all_fields is set.
    std::map<std::string, std::int64_t> field_maxima;
};

struct SearchReport {
    std::string pattern;
    Setting setting = Setting::Clique;
    FieldSpec field = FieldSpec::gf(2);
    bool from_file = false;
    std::vector<LevelReport> levels;

    const LevelReport* level(int n) const;
    /// True when every level with field maxima has them all equal.
    bool fields_agree() const;
};

SearchReport extremal_betti(const SearchOptions& opts);

/// Scores an external corpus instead of self-enumerating. Graphs containing
/// H are skipped and counted as pruned; no isomorphism rejection is applied.
SearchReport score_corpus(const std::vector<Graph>& graphs, const SearchOptions& opts);

struct MonotonicityResult {
    bool ok = true;
    /// First n with exact_max(n) > exact_max(n + 1).
    std::optional<int> violation_at;
    std::string detail;
};

/// Checks exact_max(n) <= exact_max(n + 1) over consecutive levels with
/// n >= 1. Level 0 is skipped: the empty complex has b~_{-1} = 1 while a point
/// has total 0.
MonotonicityResult check_monotonicity(const SearchReport& report);

} // namespace flagbetti
