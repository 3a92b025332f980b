#include "liekit/kernels.hpp"

#include "liekit/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace liekit::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() {
  if (const char *env = std::getenv("LIEKIT_SIMD"); env && std::string(env) == "scalar")
    return Isa::Scalar;
  return cpu_supports(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa> &current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

} // namespace

bool cpu_supports(Isa isa) {
  switch (isa) {
  case Isa::Scalar:
    return true;
  case Isa::Avx2:
    return avx2_table() != nullptr && cpu_has_avx2();
  }
  return false;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!cpu_supports(isa))
    throw InvalidArgument("kernel ISA not available: " + std::string(isa_name(isa)));
  current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

const KernelTable &active() {
  return active_isa() == Isa::Avx2 ? *avx2_table() : scalar_table();
}

} // namespace liekit::kernels
