#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <vector>

#include "flagbetti/graph.hpp"

namespace testing {

inline flagbetti::Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    flagbetti::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// The labeled graph on n vertices whose edge (u < v) is present when bit
/// index(u, v) of `mask` is set, pairs taken in lexicographic order.
inline flagbetti::Graph labeled_graph(int n, std::uint64_t mask) {
    flagbetti::Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1U) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Subset oracle: does some |h|-subset of g, in some order, induce h?
inline bool brute_contains_induced(const flagbetti::Graph& g, const flagbetti::Graph& h, int must_use = -1) {
    const int n = g.order();
    const int k = h.order();
    if (k > n) return false;
    if (k == 0) return true;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (std::popcount(s) != k) continue;
        if (must_use >= 0 && !((s >> must_use) & 1U)) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1U) verts.push_back(v);
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (int a = 0; a < k && ok; ++a)
                for (int b = a + 1; b < k && ok; ++b)
                    ok = g.adjacent(verts[perm[a]], verts[perm[b]]) == h.adjacent(a, b);
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
}

} // namespace testing
