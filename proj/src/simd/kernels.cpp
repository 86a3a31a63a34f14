#include "modhowe/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace modhowe::simd {

namespace scalar {

std::uint64_t count_equal(std::span<const std::uint16_t> values, std::uint16_t target) {
  std::uint64_t n = 0;
  for (std::uint16_t v : values) n += (v == target);
  return n;
}

void axpy_mod(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src,
              std::uint8_t factor, std::uint8_t p) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<std::uint8_t>((dst[i] + factor * src[i]) % p);
  }
}

}  // namespace scalar

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
  static const Isa isa = avx2::available() ? Isa::kAvx2 : Isa::kScalar;
  return isa;
}

namespace {

Isa initial_isa() {
  const char* force = std::getenv("MODHOWE_FORCE_SCALAR");
  if (force != nullptr && std::strcmp(force, "0") != 0 && *force != '\0') return Isa::kScalar;
  return detected_isa();
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{initial_isa()};
  return slot;
}

}  // namespace

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && !avx2::available()) isa = Isa::kScalar;
  active_slot().store(isa, std::memory_order_relaxed);
}

std::uint64_t count_equal(std::span<const std::uint16_t> values, std::uint16_t target) {
  if (active_isa() == Isa::kAvx2) return avx2::count_equal(values, target);
  return scalar::count_equal(values, target);
}

void axpy_mod(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src,
              std::uint8_t factor, std::uint8_t p) {
  if (factor == 0) return;
  if (active_isa() == Isa::kAvx2) return avx2::axpy_mod(dst, src, factor, p);
  scalar::axpy_mod(dst, src, factor, p);
}

}  // namespace modhowe::simd
