#include "flagbetti/homology.hpp"

#include <algorithm>
#include <cstdlib>

#include "flagbetti/constructions.hpp"
#include "flagbetti/error.hpp"
#include "rank.hpp"

namespace flagbetti {

FieldSpec FieldSpec::gf(std::uint32_t p) {
    if (!is_prime(p)) throw ArgumentError("field characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1U << 16)) throw ArgumentError("field characteristic must be below 65536");
    return FieldSpec(Kind::Prime, p);
}

FieldSpec FieldSpec::parse(const std::string& name) {
    if (name == "q" || name == "Q" || name == "rationals") return rationals();
    if (name.size() > 2 && (name.rfind("gf", 0) == 0 || name.rfind("GF", 0) == 0)) {
        const std::string digits = name.substr(2);
        if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
            digits.size() <= 5)
            return gf(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw ArgumentError("unknown field '" + name + "' (expected gf<p> or q)");
}

std::string FieldSpec::name() const { return kind_ == Kind::Rational ? "q" : "gf" + std::to_string(p_); }

Setting parse_setting(const std::string& name) {
    if (name == "clique") return Setting::Clique;
    if (name == "independence") return Setting::Independence;
    throw ArgumentError("unknown setting '" + name + "' (expected clique or independence)");
}

std::string setting_name(Setting s) { return s == Setting::Clique ? "clique" : "independence"; }

std::vector<std::size_t> FlagComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& layer : faces) f.push_back(layer.size());
    return f;
}

std::size_t FlagComplex::face_count() const {
    std::size_t total = 0;
    for (const auto& layer : faces) total += layer.size();
    return total;
}

std::int64_t BettiVector::at(int d) const {
    const int idx = d + 1;
    if (idx < 0 || idx >= static_cast<int>(reduced.size())) return 0;
    return reduced[idx];
}

std::int64_t BettiVector::total() const {
    std::int64_t t = 0;
    for (auto b : reduced) t += b;
    return t;
}

std::size_t max_faces() {
    if (const char* env = std::getenv("BETTI_MAX_FACES")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 26;
}

namespace {

struct CliqueWalker {
    const Graph& g;
    int max_size;
    std::size_t limit;
    std::size_t count = 0;
    std::vector<std::vector<std::uint64_t>>& out;

    void extend(std::uint64_t clique, int size, std::uint64_t candidates) {
        if (++count > limit)
            throw ResourceError("flag complex exceeds " + std::to_string(limit) +
                                " faces (raise BETTI_MAX_FACES to override)");
        if (static_cast<int>(out.size()) < size) out.resize(size);
        out[size - 1].push_back(clique);
        if (size == max_size) return;
        for (int v : VertexSet{candidates}) {
            // only later vertices, so each clique is produced once
            const std::uint64_t later = v == 63 ? 0 : (~std::uint64_t{0} << (v + 1));
            extend(clique | (std::uint64_t{1} << v), size + 1, candidates & g.row(v) & later);
        }
    }
};

} // namespace

FlagComplex build_flag_complex(const Graph& g, std::optional<int> max_dim) {
    FlagComplex cx{g, {}};
    const int max_size = max_dim ? *max_dim + 1 : Graph::kMaxVertices;
    if (max_size <= 0) return cx;
    CliqueWalker walker{g, max_size, max_faces(), 0, cx.faces};
    for (int v = 0; v < g.order(); ++v) {
        const std::uint64_t later = v == 63 ? 0 : (~std::uint64_t{0} << (v + 1));
        walker.extend(std::uint64_t{1} << v, 1, g.row(v) & later);
    }
    for (auto& layer : cx.faces) std::sort(layer.begin(), layer.end());
    return cx;
}

namespace {

// Boundary map from d-faces to (d-1)-faces, d >= 1; the i-th facet (dropping
// the i-th smallest vertex) carries sign (-1)^i.
detail::SparseMatrix boundary(const FlagComplex& cx, int d) {
    const auto& rows = cx.faces[d];
    const auto& cols = cx.faces[d - 1];
    detail::SparseMatrix m;
    m.cols = cols.size();
    m.rows.reserve(rows.size());
    for (std::uint64_t face : rows) {
        std::vector<detail::SparseEntry> entries;
        entries.reserve(d + 1);
        int i = 0;
        for (int v : VertexSet{face}) {
            const std::uint64_t facet = face & ~(std::uint64_t{1} << v);
            const auto it = std::lower_bound(cols.begin(), cols.end(), facet);
            entries.push_back({static_cast<std::uint32_t>(it - cols.begin()),
                               static_cast<std::int8_t>(i % 2 == 0 ? 1 : -1)});
            ++i;
        }
        m.rows.push_back(std::move(entries));
    }
    return m;
}

std::size_t rank_over(const detail::SparseMatrix& m, const FieldSpec& field) {
    if (field.kind() == FieldSpec::Kind::Rational) return detail::rank_rational(m);
    return detail::rank_gfp(m, field.characteristic());
}

} // namespace

BettiVector betti(const FlagComplex& cx, const FieldSpec& field) {
    const int dim = cx.dimension();
    // ranks[d] = rank of the boundary map out of dimension d, for d = 0..dim+1
    std::vector<std::int64_t> ranks(dim + 2, 0);
    if (dim >= 0) ranks[0] = cx.faces[0].empty() ? 0 : 1;  // augmentation onto the empty face
    for (int d = 1; d <= dim; ++d) ranks[d] = static_cast<std::int64_t>(rank_over(boundary(cx, d), field));

    BettiVector out;
    out.field = field;
    out.reduced.assign(dim + 2, 0);
    out.reduced[0] = 1 - (dim >= 0 ? ranks[0] : 0);
    for (int d = 0; d <= dim; ++d)
        out.reduced[d + 1] = static_cast<std::int64_t>(cx.faces[d].size()) - ranks[d] - ranks[d + 1];
    return out;
}

BettiVector betti_of(const Graph& g, const FieldSpec& field, Setting setting) {
    const Graph& base = g;
    if (setting == Setting::Independence) return betti(build_flag_complex(complement(base)), field);
    return betti(build_flag_complex(base), field);
}

std::int64_t total_reduced_betti(const Graph& g, const FieldSpec& field, Setting setting) {
    return betti_of(g, field, setting).total();
}

} // namespace flagbetti
