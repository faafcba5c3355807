#include "flagbetti/graph.hpp"

#include <algorithm>
#include <queue>

#include "flagbetti/error.hpp"

namespace flagbetti {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw ArgumentError("negative vertex count");
    if (n > kMaxVertices)
        throw CapacityError("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw ArgumentError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet{rows_[u]})
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    return std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    const auto all = g.vertices();
    for (int v = 0; v < g.order(); ++v)
        for (int u : (all - g.neighbors(v) - VertexSet::single(v)))
            if (v < u) out.add_edge(v, u);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.order() + h.order() > Graph::kMaxVertices)
        throw CapacityError("disjoint union would have " + std::to_string(g.order() + h.order()) + " vertices");
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    const int s = g.order();
    for (auto [u, v] : h.edges()) out.add_edge(u + s, v + s);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

std::vector<int> surviving_labels(const Graph& g, VertexSet removed) {
    if (!removed.subset_of(g.vertices())) throw ArgumentError("removed set is not a subset of the vertex set");
    return (g.vertices() - removed).to_vector();
}

Graph induced_subgraph(const Graph& g, VertexSet kept) {
    if (!kept.subset_of(g.vertices())) throw ArgumentError("kept set is not a subset of the vertex set");
    const auto labels = kept.to_vector();
    Graph out(static_cast<int>(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (g.adjacent(labels[i], labels[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph remove_set(const Graph& g, VertexSet removed) {
    if (!removed.subset_of(g.vertices())) throw ArgumentError("removed set is not a subset of the vertex set");
    return induced_subgraph(g, g.vertices() - removed);
}

Graph add_dominated_vertex(const Graph& g, int w) {
    if (w < 0 || w >= g.order()) throw ArgumentError("dominating vertex out of range");
    if (g.order() + 1 > Graph::kMaxVertices) throw CapacityError("no room for another vertex");
    Graph out(g.order() + 1);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int u : g.closed_neighbors(w)) out.add_edge(u, g.order());
    return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw ArgumentError("permutation size mismatch");
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

int degeneracy(const Graph& g) {
    VertexSet alive = g.vertices();
    int k = 0;
    while (!alive.empty()) {
        int best = -1, best_deg = Graph::kMaxVertices + 1;
        for (int v : alive) {
            int d = (g.neighbors(v) & alive).size();
            if (d < best_deg) best = v, best_deg = d;
        }
        k = std::max(k, best_deg);
        alive.erase(best);
    }
    return k;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp = VertexSet::single(unseen.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            frontier = next - comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen -= comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    q.push(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge closes a cycle through the root
    // of length at most dist[u] + dist[v] + 1, and the minimum over roots is exact.
    std::optional<int> best;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    q.push(u);
                } else if (parent[v] != u) {
                    int len = dist[u] + dist[v] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

bool is_regular(const Graph& g, int d) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

} // namespace flagbetti
