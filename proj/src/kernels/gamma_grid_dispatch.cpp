#include "psos/kernels/gamma_grid.hpp"

namespace psos::kernels {

namespace {

struct Selected {
  GammaMaxFn fn;
  const char* name;
};

Selected pick() {
#if defined(__x86_64__) || defined(_M_X64)
  if (cpu_has_avx2()) return {&gamma_max_avx2, "avx2"};
#endif
  return {&gamma_max_scalar, "scalar"};
}

const Selected& selected() {
  static const Selected s = pick();
  return s;
}

}  // namespace

GammaMaxFn select_gamma_max() { return selected().fn; }

const char* selected_gamma_kernel_name() { return selected().name; }

}  // namespace psos::kernels
