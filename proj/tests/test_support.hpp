#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "psos/params.hpp"

namespace psos_test {

// Independent polynomial root oracle (Durand-Kerner / Weierstrass), kept
// deliberately separate from the production Cardano path. Coefficients
// ascending: c[0] + c[1] z + ... + c[n] z^n.
inline std::vector<std::complex<double>> durand_kerner(
    std::vector<std::complex<double>> c, int max_iter = 400,
    double eps = 1e-14) {
  const int n = static_cast<int>(c.size()) - 1;
  for (auto& v : c) v /= c.back();
  std::vector<std::complex<double>> r(n);
  std::complex<double> seed(0.4, 0.9);
  r[0] = seed;
  for (int i = 1; i < n; ++i) r[i] = r[i - 1] * seed;
  for (int it = 0; it < max_iter; ++it) {
    double moved = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> f = c[n];
      for (int j = n - 1; j >= 0; --j) f = f * r[i] + c[j];
      std::complex<double> den(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (r[i] - r[j]);
      std::complex<double> d = f / den;
      r[i] -= d;
      moved = std::max(moved, std::abs(d));
    }
    if (moved < eps) break;
  }
  return r;
}

// Real positive roots of the x=1 cubic via the oracle, descending.
inline std::vector<double> cubic_roots_oracle(const psos::ModelParams& mp) {
  std::vector<std::complex<double>> c = {
      {-2.0 * mp.theta, 0.0}, {mp.theta_pow + 1.0, 0.0}, {-1.0, 0.0},
      {mp.theta, 0.0}};
  auto roots = durand_kerner(c);
  std::vector<double> out;
  for (auto z : roots)
    if (std::abs(z.imag()) < 1e-8 * std::max(1.0, std::abs(z.real())) &&
        z.real() > 0.0)
      out.push_back(z.real());
  std::sort(out.begin(), out.end(), std::greater<double>());
  // collapse near-duplicates (double roots)
  for (std::size_t i = 1; i < out.size();) {
    if (std::abs(out[i - 1] - out[i]) < 1e-7 * std::max(1.0, out[i - 1]))
      out.erase(out.begin() + i);
    else
      ++i;
  }
  return out;
}

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace psos_test
