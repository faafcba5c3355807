#pragma once

// Row-operation kernels for boundary-matrix elimination. Each kernel has a
// portable scalar reference and an AVX2 variant; the dispatcher picks one at
// first use from the CPU features (override with FLAGBETTI_SIMD=scalar|avx2).

#include <cstdint>
#include <span>
#include <string_view>

namespace flagbetti::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
/// Switches the dispatcher; throws ArgumentError if `isa` is unavailable.
void set_isa(Isa isa);

/// Largest prime handled by the vectorized axpy_mod; larger moduli fall back
/// to the scalar kernel.
inline constexpr std::uint32_t kSimdModulusLimit = 4093;

/// dst ^= src (GF(2) row addition). Spans must have equal length.
void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

/// dst = (dst + factor * src) mod p, entrywise. Requires entries and factor
/// already reduced below p and p < 2^16.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);

namespace scalar {
void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);
} // namespace scalar

namespace avx2 {
void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);
} // namespace avx2

} // namespace flagbetti::kernels
