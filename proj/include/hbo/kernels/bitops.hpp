#pragma once

// Word-array bit operations used by Bitset, transitive closure and cover
// reduction. A scalar reference table is always available; an AVX2 table is
// compiled on x86-64 and picked at runtime when the CPU supports it.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace hbo::kernels {

enum class Isa { scalar, avx2 };

struct BitopsTable {
  Isa isa;
  // dst |= src
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  // dst &= src
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  // dst &= ~src
  void (*andnot_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  // (a & ~b) == 0
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  // (a & b) != 0
  bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
};

const BitopsTable& scalar_table();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const BitopsTable* avx2_table();

// The table selected at startup. HBO_ISA=scalar in the environment forces
// the reference path.
const BitopsTable& active();

// Overrides the runtime choice; throws std::invalid_argument if the
// requested variant is unavailable.
void force_isa(Isa isa);

std::string_view isa_name(Isa isa);

}  // namespace hbo::kernels
