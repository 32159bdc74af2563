#include "hbo/kernels/bitops.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hbo::kernels {
namespace {

const BitopsTable* select_default() {
  if (const char* env = std::getenv("HBO_ISA"); env != nullptr && std::string(env) == "scalar") {
    return &scalar_table();
  }
  if (const BitopsTable* t = avx2_table()) return t;
  return &scalar_table();
}

std::atomic<const BitopsTable*>& current() {
  static std::atomic<const BitopsTable*> table{select_default()};
  return table;
}

}  // namespace

const BitopsTable& active() { return *current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      current().store(&scalar_table());
      return;
    case Isa::avx2:
      if (const BitopsTable* t = avx2_table()) {
        current().store(t);
        return;
      }
      throw std::invalid_argument("AVX2 bit kernels are not available on this machine");
  }
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

}  // namespace hbo::kernels
