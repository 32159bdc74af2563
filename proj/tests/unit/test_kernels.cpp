#include <random>
#include <vector>

#include "doctest.h"
#include "hbo/bitset.hpp"
#include "hbo/kernels/bitops.hpp"

using namespace hbo;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> out(n);
  for (auto& w : out) w = rng();
  return out;
}

// Every operation, every length from 0 to 19 words (covers the AVX2 tail).
void compare_tables(const kernels::BitopsTable& a, const kernels::BitopsTable& b) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n < 20; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      auto x = random_words(rng, n), y = random_words(rng, n);
      if (rep % 3 == 0) y = x;  // exercise subset-true cases
      auto x1 = x, x2 = x;
      a.or_into(x1.data(), y.data(), n);
      b.or_into(x2.data(), y.data(), n);
      CHECK(x1 == x2);
      x1 = x2 = x;
      a.and_into(x1.data(), y.data(), n);
      b.and_into(x2.data(), y.data(), n);
      CHECK(x1 == x2);
      x1 = x2 = x;
      a.andnot_into(x1.data(), y.data(), n);
      b.andnot_into(x2.data(), y.data(), n);
      CHECK(x1 == x2);
      CHECK(a.is_subset(x.data(), y.data(), n) == b.is_subset(x.data(), y.data(), n));
      CHECK(a.intersects(x.data(), y.data(), n) == b.intersects(x.data(), y.data(), n));
      CHECK(a.popcount(x.data(), n) == b.popcount(x.data(), n));
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels against a plain loop") {
  const auto& s = kernels::scalar_table();
  std::vector<std::uint64_t> a{0b1011, ~0ull, 0}, b{0b0011, 0, 5};
  CHECK(s.popcount(a.data(), 3) == 67);
  CHECK_FALSE(s.is_subset(a.data(), b.data(), 3));
  CHECK(s.is_subset(b.data() + 1, a.data() + 1, 1));
  CHECK(s.intersects(a.data(), b.data(), 1));
  s.andnot_into(a.data(), b.data(), 3);
  CHECK(a[0] == 0b1000);
}

TEST_CASE("avx2 kernels match scalar kernels") {
  const auto* avx = kernels::avx2_table();
  if (!avx) {
    MESSAGE("AVX2 unavailable, only the scalar path is tested");
    return;
  }
  CHECK(avx->isa == kernels::Isa::avx2);
  compare_tables(kernels::scalar_table(), *avx);
}

TEST_CASE("forcing the isa switches Bitset results consistently") {
  Bitset a(300), b(300);
  for (int i = 0; i < 300; i += 3) a.set(static_cast<std::size_t>(i));
  for (int i = 0; i < 300; i += 6) b.set(static_cast<std::size_t>(i));
  kernels::force_isa(kernels::Isa::scalar);
  auto s_count = a.count();
  bool s_sub = b.is_subset_of(a);
  auto s_diff = (a - b).indices();
  if (kernels::avx2_table()) {
    kernels::force_isa(kernels::Isa::avx2);
    CHECK(a.count() == s_count);
    CHECK(b.is_subset_of(a) == s_sub);
    CHECK((a - b).indices() == s_diff);
  }
  CHECK(s_count == 100);
  CHECK(s_sub);
  CHECK(s_diff.size() == 50);
}
