#include "farey/kernels.hpp"

#include <algorithm>
#include <atomic>

#include "farey/error.hpp"

namespace farey::kernels {

namespace {
// -1 automatic, otherwise an Isa value
std::atomic<int> forced{-1};
}  // namespace

void harmonic_index_row_scalar(const HarmonicRow& row, std::int32_t* j, std::uint8_t* on_line) {
  for (std::size_t i = 0; i < row.count; ++i) {
    std::int64_t u = row.u0 + row.du * static_cast<std::int64_t>(i);
    std::int64_t b = row.n - std::min(u, row.v);
    std::int64_t s = u + row.v;
    j[i] = static_cast<std::int32_t>((s - 1) / b);
    on_line[i] = s % b == 0;
  }
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() {
  int f = forced.load();
  if (f >= 0) return static_cast<Isa>(f);
  return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

void force_isa(std::optional<Isa> isa) {
  if (isa == Isa::Avx2 && !avx2_available())
    throw Error(Errc::InvalidArgument, "AVX2 is not available on this CPU");
  forced.store(isa ? static_cast<int>(*isa) : -1);
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void harmonic_index_row(const HarmonicRow& row, std::int32_t* j, std::uint8_t* on_line) {
  if (active_isa() == Isa::Avx2)
    harmonic_index_row_avx2(row, j, on_line);
  else
    harmonic_index_row_scalar(row, j, on_line);
}

}  // namespace farey::kernels
