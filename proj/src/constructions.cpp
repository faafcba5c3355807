#include "flagbetti/constructions.hpp"

#include <array>
#include <numeric>

#include "flagbetti/error.hpp"

namespace flagbetti {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ArgumentError(what);
}

void check_order(long long n) {
    if (n > Graph::kMaxVertices) throw CapacityError("family order " + std::to_string(n) + " exceeds 64");
}

Graph complete_graph(int d) {
    require(d >= 0, "complete graph order must be nonnegative");
    check_order(d);
    Graph g(d);
    for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v) g.add_edge(u, v);
    return g;
}

Graph multipartite(const std::vector<int>& parts) {
    long long total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require(parts[i] >= 0, "part sizes must be nonnegative");
        require(i == 0 || parts[i] <= parts[i - 1], "part sizes must be non-increasing");
        total += parts[i];
    }
    check_order(total);
    Graph g(static_cast<int>(total));
    std::vector<int> block(total);
    int at = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int k = 0; k < parts[i]; ++k) block[at++] = static_cast<int>(i);
    for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v)
            if (block[u] != block[v]) g.add_edge(u, v);
    return g;
}

Graph distance_graph(int n, bool cyclic) {
    check_order(n);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int d = j - i;
            if (cyclic) d = std::min(d, n - d);
            if (d <= 2) g.add_edge(i, j);
        }
    return g;
}

Graph icosahedron() {
    Graph g(12);
    for (int i = 0; i < 5; ++i) {
        const int up = 1 + i, up_next = 1 + (i + 1) % 5;
        const int low = 6 + i, low_next = 6 + (i + 1) % 5;
        g.add_edge(0, up);
        g.add_edge(up, up_next);
        g.add_edge(up, low);
        g.add_edge(up, low_next);
        g.add_edge(low, low_next);
        g.add_edge(low, 11);
    }
    const Graph c5 = construct(family::Cycle{5});
    for (int v = 0; v < 12; ++v)
        if (g.degree(v) != 5 || !isomorphic(induced_subgraph(g, g.neighbors(v)), c5))
            throw Error("icosahedron edge list is inconsistent");
    return g;
}

struct Builder {
    Graph operator()(const family::CompleteMultipartite& f) const { return multipartite(f.parts); }
    Graph operator()(const family::Independent& f) const {
        require(f.k >= 0, "independent set size must be nonnegative");
        check_order(f.k);
        return Graph(f.k);
    }
    Graph operator()(const family::Complete& f) const { return complete_graph(f.d); }
    Graph operator()(const family::Cycle& f) const {
        require(f.n >= 3, "cycles need at least 3 vertices");
        check_order(f.n);
        Graph g(f.n);
        for (int i = 0; i < f.n; ++i) g.add_edge(i, (i + 1) % f.n);
        return g;
    }
    Graph operator()(const family::Path& f) const {
        require(f.n >= 0, "path order must be nonnegative");
        check_order(f.n);
        Graph g(f.n);
        for (int i = 0; i + 1 < f.n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    Graph operator()(const family::Turan& f) const { return multipartite(turan_parts(f.d, f.n)); }
    Graph operator()(const family::TriangularPath& f) const {
        require(f.n >= 0, "triangular path order must be nonnegative");
        return distance_graph(f.n, false);
    }
    Graph operator()(const family::TriangularCycle& f) const {
        require(f.n >= 6, "triangular cycles degenerate below 6 vertices");
        return distance_graph(f.n, true);
    }
    Graph operator()(const family::Icosahedron&) const { return icosahedron(); }
    Graph operator()(const family::C5StarI3&) const {
        return join(construct(family::Cycle{5}), Graph(3));
    }
    Graph operator()(const family::Wheel5&) const {
        return join(construct(family::Cycle{5}), Graph(1));
    }
    Graph operator()(const family::DisjointCopies& f) const {
        require(f.base != nullptr, "disjoint copies need a base family");
        require(f.count >= 0, "copy count must be nonnegative");
        const Graph base = construct(*f.base);
        check_order(static_cast<long long>(base.order()) * f.count);
        Graph g(0);
        for (int i = 0; i < f.count; ++i) g = disjoint_union(g, base);
        return g;
    }
};

struct Namer {
    std::string operator()(const family::CompleteMultipartite& f) const {
        std::string s = "K_{";
        for (std::size_t i = 0; i < f.parts.size(); ++i) s += (i ? "," : "") + std::to_string(f.parts[i]);
        return s + "}";
    }
    std::string operator()(const family::Independent& f) const { return "I_" + std::to_string(f.k); }
    std::string operator()(const family::Complete& f) const { return "K_" + std::to_string(f.d); }
    std::string operator()(const family::Cycle& f) const { return "C_" + std::to_string(f.n); }
    std::string operator()(const family::Path& f) const { return "P_" + std::to_string(f.n); }
    std::string operator()(const family::Turan& f) const {
        return "T_{" + std::to_string(f.d) + "," + std::to_string(f.n) + "}";
    }
    std::string operator()(const family::TriangularPath& f) const { return "TP_" + std::to_string(f.n); }
    std::string operator()(const family::TriangularCycle& f) const { return "TC_" + std::to_string(f.n); }
    std::string operator()(const family::Icosahedron&) const { return "G_ico"; }
    std::string operator()(const family::C5StarI3&) const { return "C_5*I_3"; }
    std::string operator()(const family::Wheel5&) const { return "W_5"; }
    std::string operator()(const family::DisjointCopies& f) const {
        return std::to_string(f.count) + "x" + (f.base ? describe(*f.base) : std::string("?"));
    }
};

} // namespace

FamilySpec copies(FamilySpec base, int count) {
    return family::DisjointCopies{std::make_shared<const FamilySpec>(std::move(base)), count};
}

std::string describe(const FamilySpec& spec) { return std::visit(Namer{}, spec.value); }

Graph construct(const FamilySpec& spec) { return std::visit(Builder{}, spec.value); }

std::vector<int> turan_parts(int d, int n) {
    require(d >= 2, "Turan graph needs d >= 2");
    require(n >= 0, "Turan graph order must be nonnegative");
    const int m = d - 1;
    std::vector<int> parts(m, n / m);
    for (int i = 0; i < n % m; ++i) ++parts[i];
    return parts;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

Graph projective_plane_incidence(int p) {
    require(is_prime(p), "projective plane order must be prime");
    const long long q = static_cast<long long>(p) * p + p + 1;
    if (2 * q > Graph::kMaxVertices) throw ArgumentError("PG(2," + std::to_string(p) + ") does not fit in 64 vertices");

    std::vector<std::array<int, 3>> pts;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c) {
                std::array<int, 3> x{a, b, c};
                int lead = 0;
                while (lead < 3 && x[lead] == 0) ++lead;
                if (lead < 3 && x[lead] == 1) pts.push_back(x);
            }
    const int nq = static_cast<int>(pts.size());
    Graph g(2 * nq);
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < nq; ++j) {
            const int dot = pts[i][0] * pts[j][0] + pts[i][1] * pts[j][1] + pts[i][2] * pts[j][2];
            if (dot % p == 0) g.add_edge(i, nq + j);
        }
    return g;
}

} // namespace flagbetti
