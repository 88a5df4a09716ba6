#pragma once

#include <cstddef>

namespace psos::kernels {

// Coefficients of the four boundary-influence functions f, phi, psi, g of a
// fixed (x, y, theta, T). Each function is a difference of two guarded
// rational terms num*t/(a*t+b*u+c) (or num*u/...) over the simplex
// {t,u >= 0, t+u <= 1}; a vanishing denominator means a degenerate corner
// and the term is taken as 0.
//
// Denominators:
//   d1 = (x^2-th y^2) t + (T-th y^2) u + th y^2
//   d2 = (T x^2-th y^2) t + (1-th y^2) u + th y^2
//   d3 = (th x^2-y^2) t + (th-y^2) u + y^2
//   d4 = th(x^2-1) t + (y^2-th) u + th
//   d5 = (x^2-T) t + (th y^2-T) u + T
// Functions:
//   f   = x^2 t / d1 - T x^2 t / d2
//   phi = x^2 t / d1 - th x^2 t / d3
//   psi = y^2 u / d4 - th y^2 u / d5
//   g   =     u / d2 - T u / d1
struct GammaCoeffs {
  double a[5], b[5], c[5];  // affine denominator coefficients d_i = a t + b u + c
  double x2, Tx2, thx2, y2, thy2, T;

  static GammaCoeffs make(double x, double y, double theta, double T);
};

// Updates mx[0..3] with max over the (t,u) array of |f|, |phi|, |psi|, |g|.
using GammaMaxFn = void (*)(const GammaCoeffs&, const double* t,
                            const double* u, std::size_t n, double mx[4]);

// Scalar reference kernel.
void gamma_max_scalar(const GammaCoeffs& c, const double* t, const double* u,
                      std::size_t n, double mx[4]);

#if defined(__x86_64__) || defined(_M_X64)
// AVX2+FMA variant, 4 lanes of doubles. Only call when cpu_has_avx2().
void gamma_max_avx2(const GammaCoeffs& c, const double* t, const double* u,
                    std::size_t n, double mx[4]);
bool cpu_has_avx2();
#endif

// Best kernel for this machine, selected once at first use.
GammaMaxFn select_gamma_max();

// Name of the selected kernel ("scalar" or "avx2"), for reporting.
const char* selected_gamma_kernel_name();

}  // namespace psos::kernels
