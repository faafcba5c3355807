#pragma once

// Named graph families used as bound witnesses and appendix case objects.
//
// Labeling conventions:
//   CompleteMultipartite  parts are consecutive blocks in the given order
//   Cycle / Path          i ~ i+1 (cyclically for Cycle)
//   Turan(d, n)           balanced complete (d-1)-partite, larger parts first
//   TriangularPath(n)     i ~ j iff |i - j| <= 2
//   TriangularCycle(n)    i ~ j iff (i - j) mod n in {1, 2, n-2, n-1}
//   Icosahedron           0 apex, 1..5 upper ring, 6..10 lower ring, 11 antipode
//   C5StarI3              0..4 the 5-cycle, 5..7 the independent triple
//   Wheel5                0..4 the rim, 5 the hub
//   DisjointCopies        copy k occupies block k

#include <memory>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "flagbetti/graph.hpp"

namespace flagbetti {

struct FamilySpec;

namespace family {
struct CompleteMultipartite { std::vector<int> parts; };
struct Independent { int k; };
struct Complete { int d; };
struct Cycle { int n; };
struct Path { int n; };
struct Turan { int d; int n; };
struct TriangularPath { int n; };
struct TriangularCycle { int n; };
struct Icosahedron {};
struct C5StarI3 {};
struct Wheel5 {};
struct DisjointCopies {
    std::shared_ptr<const FamilySpec> base;
    int count;
};
} // namespace family

struct FamilySpec {
    using Variant = std::variant<family::CompleteMultipartite, family::Independent, family::Complete,
                                 family::Cycle, family::Path, family::Turan, family::TriangularPath,
                                 family::TriangularCycle, family::Icosahedron, family::C5StarI3,
                                 family::Wheel5, family::DisjointCopies>;
    Variant value;

    template <class T>
        requires(!std::is_same_v<std::decay_t<T>, FamilySpec> && std::is_constructible_v<Variant, T>)
    FamilySpec(T v) : value(std::move(v)) {}
};

FamilySpec copies(FamilySpec base, int count);

/// Short human-readable name, e.g. "K_{3,2,2}", "TC_8", "2xK_5".
std::string describe(const FamilySpec& spec);

Graph construct(const FamilySpec& spec);

/// Part sizes of the Turan graph T_{d,n}: d-1 balanced parts, larger first.
std::vector<int> turan_parts(int d, int n);

/// Point-line incidence graph of PG(2, p): points 0..q-1, lines q..2q-1 with
/// q = p^2 + p + 1. Coordinates are normalized with first nonzero entry 1.
Graph projective_plane_incidence(int p);

bool is_prime(long long p);

} // namespace flagbetti
