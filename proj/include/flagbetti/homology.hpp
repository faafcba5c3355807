#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagbetti/graph.hpp"

namespace flagbetti {

/// Coefficient field: GF(p) for a prime p, or the rationals.
class FieldSpec {
public:
    enum class Kind { Prime, Rational };

    static FieldSpec gf(std::uint32_t p);
    static FieldSpec rationals() { return FieldSpec(Kind::Rational, 0); }
    /// "gf2", "gf3", "gf5", ..., or "q".
    static FieldSpec parse(const std::string& name);

    Kind kind() const { return kind_; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

/// Which complex of a graph is meant: its clique complex, or the independence
/// complex (the clique complex of the complement).
enum class Setting { Clique, Independence };

Setting parse_setting(const std::string& name);
std::string setting_name(Setting s);

/// Faces of the clique complex of a graph, grouped by dimension. Faces are
/// vertex bitmasks, sorted ascending within each dimension.
struct FlagComplex {
    Graph source;
    std::vector<std::vector<std::uint64_t>> faces;  // faces[d] = d-dimensional faces

    int dimension() const { return static_cast<int>(faces.size()) - 1; }
    /// f-vector (f_0, f_1, ...); empty for the empty complex.
    std::vector<std::size_t> f_vector() const;
    std::size_t face_count() const;
};

/// Reduced Betti numbers indexed from -1: reduced[0] is b~_{-1}.
struct BettiVector {
    std::vector<std::int64_t> reduced;
    FieldSpec field = FieldSpec::gf(2);

    /// b~_d for d >= -1; zero above the stored range.
    std::int64_t at(int d) const;
    std::int64_t total() const;
};

/// Face-count guard: 2^26 unless the BETTI_MAX_FACES environment variable
/// overrides it.
std::size_t max_faces();

/// All cliques of g up to size max_dim + 1. Throws ResourceError when the
/// face count passes max_faces().
FlagComplex build_flag_complex(const Graph& g, std::optional<int> max_dim = std::nullopt);

BettiVector betti(const FlagComplex& cx, const FieldSpec& field);

/// Sum of reduced Betti numbers of cl(g) (Clique) or cl(complement g) (Independence).
std::int64_t total_reduced_betti(const Graph& g, const FieldSpec& field = FieldSpec::gf(2),
                                 Setting setting = Setting::Independence);

BettiVector betti_of(const Graph& g, const FieldSpec& field = FieldSpec::gf(2),
                     Setting setting = Setting::Independence);

} // namespace flagbetti
