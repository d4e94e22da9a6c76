#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace farey::kernels {

// One row of midpoints (U_i / N, V / N) with U_i = u0 + du * i.
// For each point: J = #{j >= 1 : j < (U+V)/(N - min(U,V))} and whether
// (U+V)/(N - min(U,V)) is an integer (the point lies on a jump line).
struct HarmonicRow {
  std::int64_t u0 = 0;
  std::int64_t du = 0;
  std::int64_t v = 0;
  std::int64_t n = 0;
  std::size_t count = 0;
};

// Inputs must satisfy 0 < U, V < N and N < 2^50.
inline constexpr std::int64_t kMaxDenominator = std::int64_t{1} << 50;

enum class Isa { Scalar, Avx2 };

void harmonic_index_row_scalar(const HarmonicRow& row, std::int32_t* j, std::uint8_t* on_line);
void harmonic_index_row_avx2(const HarmonicRow& row, std::int32_t* j, std::uint8_t* on_line);

bool avx2_available();
Isa active_isa();
// Pin the dispatch target; nullopt restores automatic selection.
void force_isa(std::optional<Isa> isa);
const char* isa_name(Isa isa);

void harmonic_index_row(const HarmonicRow& row, std::int32_t* j, std::uint8_t* on_line);

}  // namespace farey::kernels
