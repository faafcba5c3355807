#pragma once

// Rank of a sparse integer matrix (small entries; +-1 for simplicial boundaries) over
// GF(2), GF(p) and Q. Internal to the library.

#include <cstdint>
#include <vector>

namespace flagbetti::detail {

struct SparseEntry {
    std::uint32_t col;
    std::int8_t value;
};

struct SparseMatrix {
    std::size_t cols = 0;
    std::vector<std::vector<SparseEntry>> rows;
};

std::size_t rank_gf2(const SparseMatrix& m);
std::size_t rank_gfp(const SparseMatrix& m, std::uint32_t p);
/// Exact rank over Q by fraction-free elimination.
std::size_t rank_rational(const SparseMatrix& m);

} // namespace flagbetti::detail
