#include <atomic>
#include <cstdlib>
#include <string>

#include "imx/error.hpp"
#include "imx/kernels.hpp"

namespace imx::kernels {

#ifndef IMX_HAVE_AVX2
const KernelTable* avx2_table() { return nullptr; }
#endif

namespace {

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* detect() {
  if (const char* env = std::getenv("IMX_ISA"); env != nullptr && std::string(env) == "scalar") {
    return &scalar_table();
  }
  if (cpu_supports(Isa::Avx2)) return avx2_table();
  return &scalar_table();
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) && defined(__GNUC__)
      return avx2_table() != nullptr && __builtin_cpu_supports("avx2") &&
             __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& active() {
  const KernelTable* table = g_active.load(std::memory_order_acquire);
  if (table == nullptr) {
    table = detect();
    g_active.store(table, std::memory_order_release);
  }
  return *table;
}

void select(Isa isa) {
  if (!cpu_supports(isa)) {
    throw Error(ErrorCode::InvalidArgument,
                "kernel variant " + std::string(to_string(isa)) + " is not available");
  }
  g_active.store(isa == Isa::Scalar ? &scalar_table() : avx2_table(), std::memory_order_release);
}

void reset() { g_active.store(detect(), std::memory_order_release); }

}  // namespace imx::kernels
