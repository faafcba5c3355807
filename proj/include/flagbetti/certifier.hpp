#pragma once

// Certified integer upper bounds on the total reduced Betti number of the
// independence complex, built from three recursive inequalities:
//
//   split  b(G) <= b(G - v) + b(G - N[v])
//   fold   b(G) <= sum_i b(G - N[v_i] - {v_1..v_{i-1}})    over the neighbors v_i of v
//   cut    b(G) <= b(C) b(G') + sum_i b(G^i)                for a cut {v_1..v_d}
//
// Leaves are exact homology values. All vertex labels in a certificate refer
// to the root graph; every node covers the subgraph induced by `vertices`.

#include <cstdint>
#include <string>
#include <vector>

#include "flagbetti/graph.hpp"

namespace flagbetti {

struct FoldStep {
    int vertex = -1;
    std::vector<int> order;          // v_1..v_d
    std::vector<int> removed_sizes;  // k_i = |N[v_i] u {v_1..v_{i-1}}|
    std::vector<VertexSet> removed;  // N[v_i] u {v_1..v_{i-1}}
    std::vector<Graph> children;     // G^i, relabeled densely
};

/// Throws ArgumentError if v is isolated or `order` is not a permutation of N(v).
FoldStep fold_step(const Graph& g, int v, const std::vector<int>& order);

struct SplitStep {
    int vertex = -1;
    Graph without_vertex;        // G - v
    Graph without_neighborhood;  // G - N[v]
};

SplitStep single_vertex_split(const Graph& g, int v);

/// Neighbor order used by the default strategy: descending degree, ties
/// toward neighbors non-adjacent to more already-ordered ones, then lowest label.
std::vector<int> default_neighbor_order(const Graph& g, int v);

struct CertNode {
    enum class Kind { Leaf, Fold, Split, Cut };

    Kind kind = Kind::Leaf;
    VertexSet vertices;
    std::int64_t bound = 0;

    /// Leaf: "homology" (exact computation) or "isolated-vertex" (a cone, value 0).
    std::string leaf_reason;
    /// Fold / Split: the chosen vertex.
    int pivot = -1;
    /// Fold: v_1..v_d; Cut: the cut vertices in removal order.
    std::vector<int> order;
    /// Fold: k_i per branch.
    std::vector<int> removed_sizes;
    /// Node ids. Fold: one per branch. Split: [G - v, G - N[v]].
    /// Cut: [C, G', G^1, ..., G^d].
    std::vector<int> children;
};

struct BoundCertificate {
    Graph graph;
    int base_size = 0;
    /// One node per distinct subgraph; repeated subgraphs share a node, so the
    /// tree is stored as a DAG. Children precede their parents.
    std::vector<CertNode> nodes;
    int root = -1;

    std::int64_t bound() const { return nodes.at(root).bound; }
};

struct CertifyConfig {
    enum class Strategy { Default, TryAllOrders };

    int base_size = 6;
    Strategy strategy = Strategy::Default;
    /// Distinct subgraphs explored before a ResourceError.
    std::size_t max_nodes = std::size_t{1} << 20;
};

BoundCertificate certify(const Graph& g, const CertifyConfig& cfg = {});

/// Recomputes every node from scratch: subgraph bookkeeping, lemma
/// combination, and exact leaf values. Returns an empty string when the
/// certificate is valid, otherwise a description of the first defect.
std::string replay_certificate(const BoundCertificate& cert);

std::string kind_name(CertNode::Kind k);

} // namespace flagbetti
