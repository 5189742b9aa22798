#include "equigrass/bitops.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace equigrass::simd {

namespace scalar {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

bool any(const std::uint64_t* w, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        if (w[i]) return true;
    return false;
}

std::size_t popcount(const std::uint64_t* w, std::size_t n)
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(w[i]);
    return c;
}

std::size_t first_set(const std::uint64_t* w, std::size_t n, std::size_t from_word)
{
    for (std::size_t i = from_word; i < n; ++i)
        if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return npos;
}

}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {

__attribute__((target("avx2"))) void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

__attribute__((target("avx2"))) bool any(const std::uint64_t* w, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        if (!_mm256_testz_si256(a, a)) return true;
    }
    for (; i < n; ++i)
        if (w[i]) return true;
    return false;
}

// nibble lookup popcount
__attribute__((target("avx2"))) std::size_t popcount(const std::uint64_t* w, std::size_t n)
{
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        __m256i lo = _mm256_and_si256(v, low);
        __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
        __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::size_t c = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) c += std::popcount(w[i]);
    return c;
}

__attribute__((target("avx2"))) std::size_t first_set(const std::uint64_t* w, std::size_t n, std::size_t from_word)
{
    std::size_t i = from_word;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        if (!_mm256_testz_si256(a, a)) break;
    }
    for (; i < n; ++i)
        if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return npos;
}

}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < n; ++i) dst[i] ^= src[i];
}

bool any(const std::uint64_t* w, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        if (vmaxvq_u32(vreinterpretq_u32_u64(vld1q_u64(w + i)))) return true;
    for (; i < n; ++i)
        if (w[i]) return true;
    return false;
}

std::size_t popcount(const std::uint64_t* w, std::size_t n)
{
    std::size_t c = 0, i = 0;
    for (; i + 2 <= n; i += 2) c += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(w + i))));
    for (; i < n; ++i) c += std::popcount(w[i]);
    return c;
}

std::size_t first_set(const std::uint64_t* w, std::size_t n, std::size_t from_word)
{
    std::size_t i = from_word;
    for (; i + 2 <= n; i += 2)
        if (vmaxvq_u32(vreinterpretq_u32_u64(vld1q_u64(w + i)))) break;
    for (; i < n; ++i)
        if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return npos;
}

}  // namespace neon
#endif

namespace {

struct Table {
    void (*xor_into)(std::uint64_t*, const std::uint64_t*, std::size_t);
    bool (*any)(const std::uint64_t*, std::size_t);
    std::size_t (*popcount)(const std::uint64_t*, std::size_t);
    std::size_t (*first_set)(const std::uint64_t*, std::size_t, std::size_t);
};

Table table_for(Isa isa)
{
    switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::Avx2:
        return {avx2::xor_into, avx2::any, avx2::popcount, avx2::first_set};
#endif
#if defined(__aarch64__)
    case Isa::Neon:
        return {neon::xor_into, neon::any, neon::popcount, neon::first_set};
#endif
    default:
        return {scalar::xor_into, scalar::any, scalar::popcount, scalar::first_set};
    }
}

std::atomic<Isa> g_isa{default_isa()};

const Table& table()
{
    static const Table scalar_t = table_for(Isa::Scalar);
    static const Table avx2_t = table_for(Isa::Avx2);
    static const Table neon_t = table_for(Isa::Neon);
    switch (g_isa.load(std::memory_order_relaxed)) {
    case Isa::Avx2: return avx2_t;
    case Isa::Neon: return neon_t;
    default: return scalar_t;
    }
}

}  // namespace

const char* isa_name(Isa isa)
{
    switch (isa) {
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    default: return "scalar";
    }
}

bool isa_supported(Isa isa)
{
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Isa default_isa()
{
    const char* env = std::getenv("EQUIGRASS_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
    if (isa_supported(Isa::Avx2)) return Isa::Avx2;
    if (isa_supported(Isa::Neon)) return Isa::Neon;
    return Isa::Scalar;
}

Isa active_isa()
{
    return g_isa.load(std::memory_order_relaxed);
}

void set_active_isa(Isa isa)
{
    if (!isa_supported(isa)) throw std::invalid_argument(std::string("isa not supported: ") + isa_name(isa));
    g_isa.store(isa, std::memory_order_relaxed);
}

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) { table().xor_into(dst, src, n); }
bool any(const std::uint64_t* w, std::size_t n) { return table().any(w, n); }
std::size_t popcount(const std::uint64_t* w, std::size_t n) { return table().popcount(w, n); }
std::size_t first_set(const std::uint64_t* w, std::size_t n, std::size_t from_word) { return table().first_set(w, n, from_word); }

}  // namespace equigrass::simd
