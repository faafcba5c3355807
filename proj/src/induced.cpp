#include <algorithm>
#include <numeric>

#include "flagbetti/graph.hpp"

namespace flagbetti {

namespace {

// Maps pattern vertices (in a connectivity-first order) onto host vertices,
// keeping every already-mapped pair's adjacency identical.
class InducedMatcher {
public:
    InducedMatcher(const Graph& host, const Graph& pattern) : g_(host), h_(pattern) {
        const int k = h_.order();
        order_.resize(k);
        std::iota(order_.begin(), order_.end(), 0);
        // Highest degree first, then prefer vertices adjacent to earlier ones.
        std::vector<int> placed;
        std::vector<bool> used(k, false);
        for (int step = 0; step < k; ++step) {
            int best = -1, best_key = -1;
            for (int v = 0; v < k; ++v) {
                if (used[v]) continue;
                int links = 0;
                for (int u : placed) links += h_.adjacent(u, v);
                int key = links * 128 + h_.degree(v);
                if (key > best_key) best = v, best_key = key;
            }
            used[best] = true;
            placed.push_back(best);
        }
        order_ = placed;
        map_.assign(k, -1);
    }

    bool search_from(VertexSet used) { return extend(0, used); }

    /// Pins pattern vertex `pv` to host vertex `hv` before searching.
    bool search_pinned(int pv, int hv) {
        auto it = std::find(order_.begin(), order_.end(), pv);
        std::rotate(order_.begin(), it, it + 1);
        map_.assign(h_.order(), -1);
        if (!degree_ok(pv, hv)) return false;
        map_[pv] = hv;
        return extend(1, VertexSet::single(hv));
    }

private:
    bool degree_ok(int pv, int hv) const {
        const int dg = g_.degree(hv), dh = h_.degree(pv);
        return dg >= dh && (g_.order() - 1 - dg) >= (h_.order() - 1 - dh);
    }

    bool extend(int depth, VertexSet used) {
        if (depth == h_.order()) return true;
        const int pv = order_[depth];
        VertexSet cand = g_.vertices() - used;
        for (int i = 0; i < depth; ++i) {
            const int qv = order_[i];
            const int hv = map_[qv];
            if (h_.adjacent(pv, qv))
                cand &= g_.neighbors(hv);
            else
                cand -= g_.closed_neighbors(hv);
        }
        for (int c : cand) {
            if (!degree_ok(pv, c)) continue;
            map_[pv] = c;
            if (extend(depth + 1, used | VertexSet::single(c))) return true;
        }
        map_[pv] = -1;
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<int> order_;
    std::vector<int> map_;
};

bool quick_reject(const Graph& g, const Graph& h) {
    return h.order() > g.order();
}

} // namespace

bool contains_induced(const Graph& g, const Graph& h) {
    if (h.order() == 0) return true;
    if (quick_reject(g, h)) return false;
    InducedMatcher m(g, h);
    return m.search_from(VertexSet{});
}

bool contains_induced_through(const Graph& g, const Graph& h, int must_use) {
    if (h.order() == 0 || quick_reject(g, h)) return false;
    InducedMatcher m(g, h);
    for (int pv = 0; pv < h.order(); ++pv)
        if (m.search_pinned(pv, must_use)) return true;
    return false;
}

} // namespace flagbetti
