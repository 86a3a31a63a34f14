#pragma once

// Data-parallel inner loops of the enumeration core.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant compiled into its own translation unit. The public entry points
// dispatch once per process on the CPU's capabilities; the per-ISA namespaces
// are exposed so tests can check the variants against each other.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace modhowe::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// Best ISA supported by this CPU and build.
Isa detected_isa();

/// ISA used by the dispatching entry points. Defaults to detected_isa();
/// MODHOWE_FORCE_SCALAR=1 in the environment pins it to kScalar.
Isa active_isa();

/// Overrides the active ISA (tests only). Requesting an ISA the CPU lacks
/// falls back to scalar.
void set_active_isa(Isa isa);

/// Number of positions i with values[i] == target.
std::uint64_t count_equal(std::span<const std::uint16_t> values, std::uint16_t target);

/// dst[i] = (dst[i] + factor * src[i]) mod p, for p < 16 and all entries < p.
void axpy_mod(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src,
              std::uint8_t factor, std::uint8_t p);

namespace scalar {
std::uint64_t count_equal(std::span<const std::uint16_t> values, std::uint16_t target);
void axpy_mod(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src,
              std::uint8_t factor, std::uint8_t p);
}  // namespace scalar

namespace avx2 {
bool available();
std::uint64_t count_equal(std::span<const std::uint16_t> values, std::uint16_t target);
void axpy_mod(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src,
              std::uint8_t factor, std::uint8_t p);
}  // namespace avx2

}  // namespace modhowe::simd
