#include "flagbetti/certifier.hpp"

#include <algorithm>
#include <unordered_map>

#include "flagbetti/error.hpp"
#include "flagbetti/homology.hpp"

namespace flagbetti {

namespace {

VertexSet closed_in(const Graph& g, int v, VertexSet within) { return g.closed_neighbors(v) & within; }

std::vector<VertexSet> components_in(const Graph& g, VertexSet s) {
    std::vector<VertexSet> out;
    VertexSet unseen = s;
    while (!unseen.empty()) {
        VertexSet comp = VertexSet::single(unseen.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v) & s;
            frontier = next - comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen -= comp;
    }
    return out;
}

// Children of the fold lemma at v with the given neighbor order, within s.
std::vector<VertexSet> fold_removed(const Graph& g, VertexSet s, const std::vector<int>& order) {
    std::vector<VertexSet> removed;
    VertexSet earlier;
    for (int u : order) {
        removed.push_back(closed_in(g, u, s) | earlier);
        earlier.insert(u);
    }
    return removed;
}

std::vector<int> neighbor_order(const Graph& g, VertexSet s, int v) {
    std::vector<int> rest = (g.neighbors(v) & s).to_vector();
    std::vector<int> order;
    while (!rest.empty()) {
        auto best = rest.begin();
        auto key = [&](int u) {
            int missing = 0;
            for (int w : order) missing += !g.adjacent(u, w);
            return std::pair{(g.neighbors(u) & s).size(), missing};
        };
        for (auto it = rest.begin() + 1; it != rest.end(); ++it)
            if (key(*it) > key(*best)) best = it;
        order.push_back(*best);
        rest.erase(best);
    }
    return order;
}

class Certifier {
public:
    Certifier(const Graph& g, const CertifyConfig& cfg) : g_(g), cfg_(cfg) {}

    BoundCertificate run() {
        BoundCertificate cert;
        cert.graph = g_;
        cert.base_size = cfg_.base_size;
        const int root = solve(g_.vertices());
        // drop subgraphs that only losing candidates referenced
        std::vector<bool> live(nodes_.size(), false);
        live[root] = true;
        for (int id = root; id >= 0; --id)
            if (live[id])
                for (int c : nodes_[id].children) live[c] = true;
        std::vector<int> renumber(nodes_.size(), -1);
        for (std::size_t id = 0; id < nodes_.size(); ++id) {
            if (!live[id]) continue;
            renumber[id] = static_cast<int>(cert.nodes.size());
            cert.nodes.push_back(std::move(nodes_[id]));
            for (int& c : cert.nodes.back().children) c = renumber[c];
        }
        cert.root = renumber[root];
        return cert;
    }

private:
    int add(CertNode node) {
        nodes_.push_back(std::move(node));
        return static_cast<int>(nodes_.size()) - 1;
    }

    std::int64_t bound_of(int id) const { return nodes_[id].bound; }

    int solve(VertexSet s) {
        if (auto it = memo_.find(s.bits()); it != memo_.end()) return it->second;
        if (memo_.size() >= cfg_.max_nodes)
            throw ResourceError("certifier explored more than " + std::to_string(cfg_.max_nodes) + " subgraphs");
        const int id = build(s);
        memo_.emplace(s.bits(), id);
        return id;
    }

    int build(VertexSet s) {
        CertNode node;
        node.vertices = s;
        if (s.size() <= cfg_.base_size) {
            node.leaf_reason = "homology";
            node.bound = total_reduced_betti(induced_subgraph(g_, s), FieldSpec::gf(2), Setting::Independence);
            return add(std::move(node));
        }
        for (int v : s)
            if ((g_.neighbors(v) & s).empty()) {
                node.leaf_reason = "isolated-vertex";
                node.bound = 0;
                return add(std::move(node));
            }

        const auto comps = components_in(g_, s);
        if (comps.size() > 1) {
            node.kind = CertNode::Kind::Cut;
            const int c = solve(comps.front());
            const int rest = solve(s - comps.front());
            node.children = {c, rest};
            node.bound = bound_of(c) * bound_of(rest);
            return add(std::move(node));
        }

        CertNode best = best_fold(s);
        if (auto cut = find_cut(s); !cut.empty()) {
            CertNode alt = cut_node(s, cut);
            if (alt.bound < best.bound) best = std::move(alt);
        }
        return add(std::move(best));
    }

    CertNode fold_node(VertexSet s, int v, const std::vector<int>& order) {
        CertNode node;
        node.kind = CertNode::Kind::Fold;
        node.vertices = s;
        node.pivot = v;
        node.order = order;
        for (VertexSet r : fold_removed(g_, s, order)) {
            node.removed_sizes.push_back(r.size());
            const int child = solve(s - r);
            node.children.push_back(child);
            node.bound += bound_of(child);
        }
        return node;
    }

    CertNode best_fold(VertexSet s) {
        int v = -1, dmin = Graph::kMaxVertices + 1;
        for (int u : s) {
            const int d = (g_.neighbors(u) & s).size();
            if (d < dmin) v = u, dmin = d;
        }
        std::vector<int> order = neighbor_order(g_, s, v);
        CertNode best = fold_node(s, v, order);
        if (cfg_.strategy == CertifyConfig::Strategy::TryAllOrders && order.size() <= 5) {
            std::sort(order.begin(), order.end());
            do {
                CertNode alt = fold_node(s, v, order);
                if (alt.bound < best.bound) best = std::move(alt);
            } while (std::next_permutation(order.begin(), order.end()));
        }
        return best;
    }

    // Smallest articulation vertex, else the lexicographically first 2-cut.
    std::vector<int> find_cut(VertexSet s) const {
        for (int a : s)
            if (components_in(g_, s - VertexSet::single(a)).size() > 1) return {a};
        for (int a : s)
            for (int b : s)
                if (a < b && components_in(g_, s - VertexSet::single(a) - VertexSet::single(b)).size() > 1)
                    return {a, b};
        return {};
    }

    CertNode cut_node(VertexSet s, const std::vector<int>& cut) {
        CertNode node;
        node.kind = CertNode::Kind::Cut;
        node.vertices = s;
        node.order = cut;
        VertexSet cut_set;
        for (int v : cut) cut_set.insert(v);
        const auto comps = components_in(g_, s - cut_set);
        const int c = solve(comps.front());
        const int rest = solve(s - cut_set - comps.front());
        node.children = {c, rest};
        node.bound = bound_of(c) * bound_of(rest);
        for (VertexSet r : fold_removed(g_, s, cut)) {
            const int child = solve(s - r);
            node.children.push_back(child);
            node.bound += bound_of(child);
        }
        return node;
    }

    const Graph& g_;
    const CertifyConfig& cfg_;
    std::vector<CertNode> nodes_;
    std::unordered_map<std::uint64_t, int> memo_;
};

} // namespace

FoldStep fold_step(const Graph& g, int v, const std::vector<int>& order) {
    if (v < 0 || v >= g.order()) throw ArgumentError("fold vertex out of range");
    if (g.degree(v) == 0) throw ArgumentError("fold vertex is isolated");
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v).to_vector()) throw ArgumentError("fold order is not a permutation of N(v)");

    FoldStep step;
    step.vertex = v;
    step.order = order;
    step.removed = fold_removed(g, g.vertices(), order);
    for (VertexSet r : step.removed) {
        step.removed_sizes.push_back(r.size());
        step.children.push_back(remove_set(g, r));
    }
    return step;
}

SplitStep single_vertex_split(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw ArgumentError("split vertex out of range");
    return {v, remove_set(g, VertexSet::single(v)), remove_set(g, g.closed_neighbors(v))};
}

std::vector<int> default_neighbor_order(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw ArgumentError("vertex out of range");
    return neighbor_order(g, g.vertices(), v);
}

BoundCertificate certify(const Graph& g, const CertifyConfig& cfg) {
    if (cfg.base_size < 0) throw ArgumentError("base size must be nonnegative");
    return Certifier(g, cfg).run();
}

std::string kind_name(CertNode::Kind k) {
    switch (k) {
    case CertNode::Kind::Leaf: return "leaf";
    case CertNode::Kind::Fold: return "fold";
    case CertNode::Kind::Split: return "split";
    case CertNode::Kind::Cut: return "cut";
    }
    return "?";
}

std::string replay_certificate(const BoundCertificate& cert) {
    const Graph& g = cert.graph;
    const auto& nodes = cert.nodes;
    if (cert.root < 0 || cert.root >= static_cast<int>(nodes.size())) return "root id out of range";
    if (nodes[cert.root].vertices != g.vertices()) return "root does not cover the whole graph";

    for (std::size_t id = 0; id < nodes.size(); ++id) {
        const CertNode& n = nodes[id];
        const VertexSet s = n.vertices;
        const std::string where = "node " + std::to_string(id) + ": ";
        if (!s.subset_of(g.vertices())) return where + "vertices outside the graph";
        for (int c : n.children)
            if (c < 0 || c >= static_cast<int>(id)) return where + "child id must precede its parent";
        auto child_set = [&](std::size_t i) { return nodes[n.children[i]].vertices; };
        auto child_bound = [&](std::size_t i) { return nodes[n.children[i]].bound; };

        switch (n.kind) {
        case CertNode::Kind::Leaf: {
            if (!n.children.empty()) return where + "leaf with children";
            std::int64_t exact = 0;
            if (n.leaf_reason == "isolated-vertex") {
                bool found = false;
                for (int v : s) found |= (g.neighbors(v) & s).empty();
                if (!found) return where + "no isolated vertex";
            } else {
                exact = total_reduced_betti(induced_subgraph(g, s), FieldSpec::gf(2), Setting::Independence);
            }
            if (exact != n.bound) return where + "leaf value differs from homology";
            break;
        }
        case CertNode::Kind::Split: {
            if (n.children.size() != 2 || !s.contains(n.pivot)) return where + "malformed split";
            if (child_set(0) != s - VertexSet::single(n.pivot)) return where + "split child G-v mismatch";
            if (child_set(1) != s - closed_in(g, n.pivot, s)) return where + "split child G-N[v] mismatch";
            if (n.bound != child_bound(0) + child_bound(1)) return where + "split sum mismatch";
            break;
        }
        case CertNode::Kind::Fold: {
            if (!s.contains(n.pivot)) return where + "pivot outside subgraph";
            std::vector<int> sorted = n.order;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != (g.neighbors(n.pivot) & s).to_vector()) return where + "order is not N(v)";
            const auto removed = fold_removed(g, s, n.order);
            if (n.children.size() != removed.size()) return where + "branch count mismatch";
            std::int64_t sum = 0;
            for (std::size_t i = 0; i < removed.size(); ++i) {
                if (child_set(i) != s - removed[i]) return where + "fold child mismatch";
                if (i < n.removed_sizes.size() && n.removed_sizes[i] != removed[i].size())
                    return where + "k_i mismatch";
                sum += child_bound(i);
            }
            if (sum != n.bound) return where + "fold sum mismatch";
            break;
        }
        case CertNode::Kind::Cut: {
            VertexSet cut;
            for (int v : n.order) cut.insert(v);
            if (!cut.subset_of(s)) return where + "cut outside subgraph";
            if (n.children.size() != 2 + n.order.size()) return where + "cut child count mismatch";
            const auto comps = components_in(g, s - cut);
            if (comps.size() < 2) return where + "cut does not disconnect";
            if (child_set(0) != comps.front()) return where + "cut component mismatch";
            if (child_set(1) != s - cut - comps.front()) return where + "cut remainder mismatch";
            std::int64_t expected = child_bound(0) * child_bound(1);
            const auto removed = fold_removed(g, s, n.order);
            for (std::size_t i = 0; i < removed.size(); ++i) {
                if (child_set(2 + i) != s - removed[i]) return where + "cut branch mismatch";
                expected += child_bound(2 + i);
            }
            if (expected != n.bound) return where + "cut combination mismatch";
            break;
        }
        }
    }
    return {};
}

} // namespace flagbetti
