#pragma once

// Small simple graphs (at most 64 vertices) stored as one 64-bit adjacency row
// per vertex, plus the graph algebra used throughout the library.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flagbetti {

/// A set of vertices of one graph, as a bitmask over 0..63.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
    /// {0, ..., n-1}
    static constexpr VertexSet range(int n) {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int min() const { return std::countr_zero(bits_); }
    constexpr int max() const { return 63 - std::countl_zero(bits_); }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

    /// Iterates set members in increasing order.
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        friend constexpr bool operator==(iterator, iterator) = default;

    private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{0}; }

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1 with n <= 64.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    /// Edgeless graph on n vertices. Throws CapacityError when n > 64.
    explicit Graph(int n);
    /// Graph on n vertices with the given edges. Throws ArgumentError on loops
    /// or out-of-range endpoints.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
    VertexSet neighbors(int v) const { return VertexSet{rows_[v]}; }
    VertexSet closed_neighbors(int v) const { return VertexSet{rows_[v] | (std::uint64_t{1} << v)}; }
    int degree(int v) const { return std::popcount(rows_[v]); }
    std::uint64_t row(int v) const { return rows_[v]; }

    int edge_count() const;
    int max_degree() const;
    int min_degree() const;
    std::vector<std::pair<int, int>> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    friend bool operator==(const Graph& a, const Graph& b);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> rows_{};
};

// Graph algebra ------------------------------------------------------------

Graph complement(const Graph& g);
/// g's vertices first, then h's shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge between the two blocks.
Graph join(const Graph& g, const Graph& h);
/// Induced subgraph on the vertices outside `removed`, relabeled densely in
/// increasing order of the surviving original labels.
Graph remove_set(const Graph& g, VertexSet removed);
/// Induced subgraph on `kept`, relabeled densely in increasing label order.
Graph induced_subgraph(const Graph& g, VertexSet kept);
/// The surviving original labels of remove_set(g, removed), in new-label order.
std::vector<int> surviving_labels(const Graph& g, VertexSet removed);

/// Adds a vertex (labeled g.order()) whose closed neighborhood is N[w] plus itself.
Graph add_dominated_vertex(const Graph& g, int w);

/// Relabels so that vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Structure ----------------------------------------------------------------

int degeneracy(const Graph& g);
bool is_connected(const Graph& g);
/// Vertex sets of the connected components, ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_bipartite(const Graph& g);
/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);
bool is_regular(const Graph& g, int d);
bool has_isolated_vertex(const Graph& g);

/// Whether some vertex subset of g induces a copy of h. Exact backtracking.
bool contains_induced(const Graph& g, const Graph& h);
/// As contains_induced, restricted to copies that use vertex `must_use` of g.
bool contains_induced_through(const Graph& g, const Graph& h, int must_use);

// graph6 -------------------------------------------------------------------

/// Decodes one graph6 word (no trailing newline). Throws ParseError naming the
/// byte offset on malformed input and CapacityError for orders above 64.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);
/// Reads every nonblank line of a graph6 file.
std::vector<Graph> read_graph6_file(const std::string& path);

// Canonical forms ----------------------------------------------------------

/// Isomorphism-invariant code: the graph6 word of the canonical relabeling.
class CanonicalCode {
public:
    CanonicalCode() = default;
    explicit CanonicalCode(std::string word) : word_(std::move(word)) {}
    const std::string& graph6() const { return word_; }
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

private:
    std::string word_;
};

struct CanonicalLabeling {
    /// canonical position -> original vertex
    std::vector<int> order;
    Graph canonical;
    /// Generators of (a subgroup of) the automorphism group found during search,
    /// each mapping vertex v to gen[v].
    std::vector<std::vector<int>> automorphisms;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalCode canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

} // namespace flagbetti
