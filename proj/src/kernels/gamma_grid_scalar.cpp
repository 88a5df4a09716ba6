#include "psos/kernels/gamma_grid.hpp"

#include <cmath>

namespace psos::kernels {

GammaCoeffs GammaCoeffs::make(double x, double y, double theta, double T) {
  GammaCoeffs c;
  const double x2 = x * x, y2 = y * y;
  const double thy2 = theta * y2;
  c.a[0] = x2 - thy2;          c.b[0] = T - thy2;        c.c[0] = thy2;
  c.a[1] = T * x2 - thy2;      c.b[1] = 1.0 - thy2;      c.c[1] = thy2;
  c.a[2] = theta * x2 - y2;    c.b[2] = theta - y2;      c.c[2] = y2;
  c.a[3] = theta * (x2 - 1.0); c.b[3] = y2 - theta;      c.c[3] = theta;
  c.a[4] = x2 - T;             c.b[4] = thy2 - T;        c.c[4] = T;
  c.x2 = x2;
  c.Tx2 = T * x2;
  c.thx2 = theta * x2;
  c.y2 = y2;
  c.thy2 = thy2;
  c.T = T;
  return c;
}

void gamma_max_scalar(const GammaCoeffs& c, const double* t, const double* u,
                      std::size_t n, double mx[4]) {
  auto term = [](double num, double den) {
    return den > 0.0 ? num / den : 0.0;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const double ti = t[i], ui = u[i];
    double d1 = c.a[0] * ti + c.b[0] * ui + c.c[0];
    double d2 = c.a[1] * ti + c.b[1] * ui + c.c[1];
    double d3 = c.a[2] * ti + c.b[2] * ui + c.c[2];
    double d4 = c.a[3] * ti + c.b[3] * ui + c.c[3];
    double d5 = c.a[4] * ti + c.b[4] * ui + c.c[4];
    double f = term(c.x2 * ti, d1) - term(c.Tx2 * ti, d2);
    double ph = term(c.x2 * ti, d1) - term(c.thx2 * ti, d3);
    double ps = term(c.y2 * ui, d4) - term(c.thy2 * ui, d5);
    double g = term(ui, d2) - term(c.T * ui, d1);
    if (std::abs(f) > mx[0]) mx[0] = std::abs(f);
    if (std::abs(ph) > mx[1]) mx[1] = std::abs(ph);
    if (std::abs(ps) > mx[2]) mx[2] = std::abs(ps);
    if (std::abs(g) > mx[3]) mx[3] = std::abs(g);
  }
}

}  // namespace psos::kernels
