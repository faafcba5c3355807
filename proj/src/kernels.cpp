#include "flagbetti/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "flagbetti/error.hpp"

namespace flagbetti::kernels {

namespace scalar {

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p) {
    const std::uint64_t f = factor;
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
}

} // namespace scalar

#if !defined(FLAGBETTI_HAVE_AVX2_TU)
namespace avx2 {
void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) { scalar::xor_into(dst, src); }
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p) {
    scalar::axpy_mod(dst, src, factor, p);
}
} // namespace avx2
#endif

namespace {

Isa detect() {
    if (const char* env = std::getenv("FLAGBETTI_SIMD")) {
        const std::string want(env);
        if (want == "scalar") return Isa::Scalar;
        if (want == "avx2" && isa_available(Isa::Avx2)) return Isa::Avx2;
    }
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

} // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
    if (isa == Isa::Scalar) return true;
#if defined(FLAGBETTI_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
    if (!isa_available(isa)) throw ArgumentError(std::string(isa_name(isa)) + " kernels unavailable on this CPU");
    current().store(isa, std::memory_order_relaxed);
}

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    if (active_isa() == Isa::Avx2)
        avx2::xor_into(dst, src);
    else
        scalar::xor_into(dst, src);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p) {
    if (active_isa() == Isa::Avx2 && p <= kSimdModulusLimit)
        avx2::axpy_mod(dst, src, factor, p);
    else
        scalar::axpy_mod(dst, src, factor, p);
}

} // namespace flagbetti::kernels
