#pragma once

#include <cstddef>
#include <cstdint>

namespace equigrass::simd {

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
// best supported, unless EQUIGRASS_SIMD=scalar
Isa default_isa();
Isa active_isa();
// throws std::invalid_argument if unsupported on this machine
void set_active_isa(Isa isa);

constexpr std::size_t npos = static_cast<std::size_t>(-1);

namespace scalar {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
bool any(const std::uint64_t* w, std::size_t n);
std::size_t popcount(const std::uint64_t* w, std::size_t n);
std::size_t first_set(const std::uint64_t* w, std::size_t n, std::size_t from_word);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
bool any(const std::uint64_t* w, std::size_t n);
std::size_t popcount(const std::uint64_t* w, std::size_t n);
std::size_t first_set(const std::uint64_t* w, std::size_t n, std::size_t from_word);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
bool any(const std::uint64_t* w, std::size_t n);
std::size_t popcount(const std::uint64_t* w, std::size_t n);
std::size_t first_set(const std::uint64_t* w, std::size_t n, std::size_t from_word);
}  // namespace neon
#endif

// dispatched through active_isa(); first_set returns a bit index or npos
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
bool any(const std::uint64_t* w, std::size_t n);
std::size_t popcount(const std::uint64_t* w, std::size_t n);
std::size_t first_set(const std::uint64_t* w, std::size_t n, std::size_t from_word = 0);

}  // namespace equigrass::simd
