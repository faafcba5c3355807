// Canonical labeling by individualization and equitable refinement, taking the
// lexicographically largest relabeled adjacency matrix over the search tree.
// Automorphisms discovered at equal leaves prune sibling subtrees.

#include <algorithm>
#include <numeric>

#include "flagbetti/graph.hpp"

namespace flagbetti {

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;
using Certificate = std::vector<std::uint64_t>;

std::uint64_t cell_mask(const Cell& c) {
    std::uint64_t m = 0;
    for (int v : c) m |= std::uint64_t{1} << v;
    return m;
}

// Splits cells by neighbor counts into each splitter cell until stable.
void refine(const Graph& g, Partition& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t wi = 0; wi < cells.size() && !changed; ++wi) {
            const std::uint64_t w = cell_mask(cells[wi]);
            Partition next;
            next.reserve(cells.size() + 4);
            for (const Cell& x : cells) {
                if (x.size() == 1) {
                    next.push_back(x);
                    continue;
                }
                std::vector<std::pair<int, int>> keyed;
                keyed.reserve(x.size());
                for (int v : x) keyed.emplace_back(std::popcount(g.row(v) & w), v);
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                if (keyed.front().first == keyed.back().first) {
                    next.push_back(x);
                    continue;
                }
                changed = true;
                Cell frag;
                int key = keyed.front().first;
                for (auto [k, v] : keyed) {
                    if (k != key) {
                        next.push_back(std::move(frag));
                        frag.clear();
                        key = k;
                    }
                    frag.push_back(v);
                }
                next.push_back(std::move(frag));
            }
            if (changed) cells = std::move(next);
        }
    }
}

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    void run() {
        Partition cells;
        if (n_ > 0) {
            Cell all(n_);
            std::iota(all.begin(), all.end(), 0);
            cells.push_back(std::move(all));
        }
        std::vector<int> prefix;
        visit(std::move(cells), prefix);
    }

    const std::vector<int>& best_order() const { return best_order_; }
    std::vector<std::vector<int>>& generators() { return gens_; }

private:
    void visit(Partition cells, std::vector<int>& prefix) {
        refine(g_, cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        const Cell candidates = cells[target];
        std::vector<int> tried;
        for (int w : candidates) {
            if (!tried.empty() && equivalent_to_tried(w, tried, prefix)) continue;
            tried.push_back(w);
            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back(Cell{w});
                Cell rest;
                for (int v : cells[i])
                    if (v != w) rest.push_back(v);
                child.push_back(std::move(rest));
            }
            prefix.push_back(w);
            visit(std::move(child), prefix);
            prefix.pop_back();
        }
    }

    // Orbit test under the discovered automorphisms that fix the prefix pointwise.
    bool equivalent_to_tried(int w, const std::vector<int>& tried, const std::vector<int>& prefix) {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const auto& gen : gens_) {
            bool fixes = true;
            for (int p : prefix)
                if (gen[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            any = true;
            for (int v = 0; v < n_; ++v) parent[find(v)] = find(gen[v]);
        }
        if (!any) return false;
        const int rw = find(w);
        for (int u : tried)
            if (find(u) == rw) return true;
        return false;
    }

    Certificate certificate(const std::vector<int>& order) const {
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[order[i]] = i;
        Certificate cert(n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int u : g_.neighbors(order[i])) cert[i] |= std::uint64_t{1} << (63 - pos[u]);
        return cert;
    }

    void leaf(const Partition& cells) {
        std::vector<int> order(n_);
        for (int i = 0; i < n_; ++i) order[i] = cells[i][0];
        Certificate cert = certificate(order);
        if (first_order_.empty() && n_ > 0) {
            first_order_ = best_order_ = order;
            first_cert_ = best_cert_ = cert;
            return;
        }
        if (cert == first_cert_) {
            record_automorphism(first_order_, order);
        } else if (cert == best_cert_) {
            record_automorphism(best_order_, order);
        } else if (cert > best_cert_) {
            best_cert_ = std::move(cert);
            best_order_ = std::move(order);
        }
    }

    void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> gen(n_);
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
            gen[from[i]] = to[i];
            identity &= from[i] == to[i];
        }
        if (!identity) gens_.push_back(std::move(gen));
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> gens_;
    std::vector<int> first_order_, best_order_;
    Certificate first_cert_, best_cert_;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
    CanonSearch search(g);
    search.run();
    CanonicalLabeling out;
    out.order = search.best_order();
    std::vector<int> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[out.order[i]] = i;
    out.canonical = relabel(g, perm);
    out.automorphisms = std::move(search.generators());
    return out;
}

Graph canonical_form(const Graph& g) { return canonical_labeling(g).canonical; }

CanonicalCode canonical_code(const Graph& g) { return CanonicalCode{emit_graph6(canonical_form(g))}; }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

} // namespace flagbetti
