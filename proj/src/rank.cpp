#include "rank.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <span>

#include "flagbetti/kernels.hpp"

namespace flagbetti::detail {

namespace {

constexpr std::uint32_t kNoPivot = ~std::uint32_t{0};

} // namespace

// Each incoming row is reduced against stored pivots keyed by their lowest
// nonzero column until it vanishes or claims a new pivot column.
std::size_t rank_gf2(const SparseMatrix& m) {
    const std::size_t words = (m.cols + 63) / 64;
    std::vector<std::uint32_t> pivot_of(m.cols, kNoPivot);
    std::vector<std::uint64_t> store;
    store.reserve(std::min(m.rows.size(), m.cols) * words);
    std::vector<std::uint64_t> row(words);
    std::size_t rank = 0;
    for (const auto& sparse : m.rows) {
        std::fill(row.begin(), row.end(), 0);
        for (auto e : sparse)
            if (e.value & 1) row[e.col / 64] ^= std::uint64_t{1} << (e.col % 64);
        std::size_t w = 0;
        while (true) {
            while (w < words && row[w] == 0) ++w;
            if (w == words) break;
            const std::uint32_t c = static_cast<std::uint32_t>(w * 64 + std::countr_zero(row[w]));
            if (pivot_of[c] == kNoPivot) {
                pivot_of[c] = static_cast<std::uint32_t>(rank++);
                store.insert(store.end(), row.begin(), row.end());
                break;
            }
            const std::uint64_t* piv = store.data() + std::size_t{pivot_of[c]} * words;
            kernels::xor_into(std::span(row).subspan(w), std::span(piv + w, words - w));
        }
    }
    return rank;
}

namespace {

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

} // namespace

std::size_t rank_gfp(const SparseMatrix& m, std::uint32_t p) {
    if (p == 2) return rank_gf2(m);
    const std::size_t cols = m.cols;
    std::vector<std::uint32_t> pivot_of(cols, kNoPivot);
    std::vector<std::uint32_t> store;
    std::vector<std::uint32_t> row(cols);
    std::size_t rank = 0;
    for (const auto& sparse : m.rows) {
        std::fill(row.begin(), row.end(), 0);
        for (auto e : sparse) {
            const auto v = static_cast<std::int64_t>(e.value) % static_cast<std::int64_t>(p);
            row[e.col] = static_cast<std::uint32_t>((row[e.col] + static_cast<std::uint32_t>(v < 0 ? v + p : v)) % p);
        }
        std::size_t c = 0;
        while (true) {
            while (c < cols && row[c] == 0) ++c;
            if (c == cols) break;
            if (pivot_of[c] == kNoPivot) {
                const std::uint64_t inv = pow_mod(row[c], p - 2, p);
                for (std::size_t j = c; j < cols; ++j) row[j] = static_cast<std::uint32_t>(row[j] * inv % p);
                pivot_of[c] = static_cast<std::uint32_t>(rank++);
                store.insert(store.end(), row.begin(), row.end());
                break;
            }
            const std::uint32_t* piv = store.data() + std::size_t{pivot_of[c]} * cols;
            kernels::axpy_mod(std::span(row).subspan(c), std::span(piv + c, cols - c), p - row[c], p);
        }
    }
    return rank;
}

namespace {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline boost::multiprecision::cpp_int checked_mul(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b) {
    return a * b;
}
inline boost::multiprecision::cpp_int checked_sub(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b) {
    return a - b;
}
inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline boost::multiprecision::cpp_int gcd_of(const boost::multiprecision::cpp_int& a,
                                             const boost::multiprecision::cpp_int& b) {
    return boost::multiprecision::gcd(a, b);
}

// Row r with leading entry b against pivot P with leading entry a becomes
// a*r - b*P, then is divided by the gcd of its entries to keep numbers small.
template <class Int>
std::size_t rank_integer(const SparseMatrix& m) {
    const std::size_t cols = m.cols;
    std::vector<std::uint32_t> pivot_of(cols, kNoPivot);
    std::vector<std::vector<Int>> pivots;
    std::vector<Int> row(cols);
    for (const auto& sparse : m.rows) {
        std::fill(row.begin(), row.end(), Int(0));
        for (auto e : sparse) row[e.col] += Int(e.value);
        std::size_t c = 0;
        while (true) {
            while (c < cols && row[c] == 0) ++c;
            if (c == cols) break;
            if (pivot_of[c] == kNoPivot) {
                pivot_of[c] = static_cast<std::uint32_t>(pivots.size());
                pivots.push_back(row);
                break;
            }
            const auto& piv = pivots[pivot_of[c]];
            const Int a = piv[c], b = row[c];
            const Int g = gcd_of(a < 0 ? Int(-a) : a, b < 0 ? Int(-b) : b);
            const Int sa = a / g, sb = b / g;
            Int content = 0;
            for (std::size_t j = c; j < cols; ++j) {
                row[j] = checked_sub(checked_mul(sa, row[j]), checked_mul(sb, piv[j]));
                if (row[j] != 0) content = gcd_of(content, row[j] < 0 ? Int(-row[j]) : row[j]);
            }
            if (content > 1)
                for (std::size_t j = c; j < cols; ++j) row[j] /= content;
        }
    }
    return pivots.size();
}

} // namespace

std::size_t rank_rational(const SparseMatrix& m) {
    try {
        return rank_integer<std::int64_t>(m);
    } catch (const Overflow&) {
        return rank_integer<boost::multiprecision::cpp_int>(m);
    }
}

} // namespace flagbetti::detail
