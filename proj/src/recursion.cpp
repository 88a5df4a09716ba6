#include "psos/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace psos {

namespace {

// log(sum_i exp(w_i)) over a small buffer.
double lse(const double* w, int n) {
  double m = w[0];
  for (int i = 1; i < n; ++i) m = std::max(m, w[i]);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::exp(w[i] - m);
  return m + std::log(s);
}

// Solve J d = g in place, partial pivoting. Returns false when singular.
bool solve_dense(std::vector<double>& J, std::vector<double>& g, int n) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(J[r * n + col]) > std::abs(J[piv * n + col])) piv = r;
    if (std::abs(J[piv * n + col]) < 1e-300) return false;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(J[piv * n + c], J[col * n + c]);
      std::swap(g[piv], g[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      double f = J[r * n + col] / J[col * n + col];
      for (int c = col; c < n; ++c) J[r * n + c] -= f * J[col * n + c];
      g[r] -= f * g[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double acc = g[r];
    for (int c = r + 1; c < n; ++c) acc -= J[r * n + c] * g[c];
    g[r] = acc / J[r * n + r];
  }
  return true;
}

struct TiSolver {
  const ModelParams& params;
  int m;
  double ln_theta;

  explicit TiSolver(const ModelParams& p)
      : params(p), m(p.m), ln_theta(std::log(p.theta)) {}

  std::vector<double> G(const std::vector<double>& h) const {
    auto F = f_map(h, params);
    std::vector<double> g(m);
    for (int i = 0; i < m; ++i) g[i] = h[i] - params.k * F[i];
    return g;
  }

  double gnorm(const std::vector<double>& h) const {
    auto g = G(h);
    double n = 0.0;
    for (double v : g) n = std::max(n, std::abs(v));
    return n;
  }

  bool newton(std::vector<double>& h, int budget, double tol) const {
    std::vector<double> J(m * m), g, gp;
    for (int it = 0; it < budget; ++it) {
      g = G(h);
      double gn = 0.0;
      for (double v : g) gn = std::max(gn, std::abs(v));
      if (gn < tol) return true;
      const double eps = 1e-7;
      for (int j = 0; j < m; ++j) {
        auto hp = h;
        hp[j] += eps;
        gp = G(hp);
        for (int i = 0; i < m; ++i) J[i * m + j] = (gp[i] - g[i]) / eps;
      }
      auto step = g;
      if (!solve_dense(J, step, m)) return false;
      double sn = 0.0;
      for (double v : step) sn = std::max(sn, std::abs(v));
      if (!std::isfinite(sn)) return false;
      if (sn > 4.0)
        for (double& v : step) v *= 4.0 / sn;  // trust region
      for (int i = 0; i < m; ++i) h[i] -= step[i];
      double hn = 0.0;
      for (double v : h) hn = std::max(hn, std::abs(v));
      if (hn > 200.0) return false;
    }
    return gnorm(h) < tol;
  }
};

}  // namespace

std::vector<double> f_map(const std::vector<double>& h,
                          const ModelParams& params) {
  const int m = params.m;
  if (static_cast<int>(h.size()) != m)
    throw DomainError("f_map: h must have m components");
  for (double v : h)
    if (!std::isfinite(v)) throw DomainError("f_map: non-finite input");

  const double lt = std::log(params.theta);
  auto dist_pow = [&](int d) { return std::pow(static_cast<double>(d), params.p); };
  std::vector<double> out(m), wnum(m + 1), wden(m + 1);

  // shared denominator: sum_j theta^((m-j)^p) e^(h_j) + 1
  for (int j = 0; j < m; ++j) wden[j] = dist_pow(m - j) * lt + h[j];
  wden[m] = 0.0;
  const double lden = lse(wden.data(), m + 1);

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      wnum[j] = dist_pow(std::abs(i - j)) * lt + h[j];
    wnum[m] = dist_pow(m - i) * lt;
    out[i] = lse(wnum.data(), m + 1) - lden;
  }
  return out;
}

double ti_residual(const std::vector<double>& z, const ModelParams& params) {
  std::vector<double> h(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) h[i] = std::log(z[i]);
  auto F = f_map(h, params);
  double r = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    double rhs = std::exp(params.k * F[i]);
    r = std::max(r, std::abs(z[i] - rhs) / std::max(1.0, z[i]));
  }
  return r;
}

TiResult ti_fixed_points(const ModelParams& params, const TiOptions& opt) {
  if (opt.starts < 1) throw DomainError("ti_fixed_points: starts must be >= 1");
  if (!(opt.damping > 0.0 && opt.damping <= 1.0))
    throw DomainError("ti_fixed_points: damping must lie in (0,1]");
  const int m = params.m;
  TiSolver solver(params);

  // lattice of coarse sign patterns plus seeded random starts
  std::vector<std::vector<double>> starts;
  {
    const std::vector<double> levels =
        (m <= 3) ? std::vector<double>{-10, -5, 0, 5, 10}
                 : std::vector<double>{-10, 0, 10};
    std::vector<int> idx(m, 0);
    while (true) {
      std::vector<double> h(m);
      for (int i = 0; i < m; ++i) h[i] = levels[idx[i]];
      starts.push_back(std::move(h));
      int pos = 0;
      while (pos < m && ++idx[pos] == static_cast<int>(levels.size()))
        idx[pos++] = 0;
      if (pos == m) break;
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> uni(-12.0, 12.0);
    for (int s = 0; s < opt.starts; ++s) {
      std::vector<double> h(m);
      for (int i = 0; i < m; ++i) h[i] = uni(rng);
      starts.push_back(std::move(h));
    }
  }

  std::vector<std::vector<double>> found;
  auto record = [&](const std::vector<double>& h) {
    if (solver.gnorm(h) >= 1e-10) return false;
    for (const auto& g : found) {
      double d = 0.0;
      for (int i = 0; i < m; ++i) d = std::max(d, std::abs(h[i] - g[i]));
      if (d < opt.dedup) return true;
    }
    found.push_back(h);
    return true;
  };

  TiResult out;
  for (const auto& h0 : starts) {
    bool any = false;

    // Newton straight from the raw start; this is what reaches the repelling
    // fixed points that damped iteration walks away from.
    {
      auto h = h0;
      if (solver.newton(h, opt.newton_iter, opt.tol)) any |= record(h);
    }

    // damped iteration toward an attracting point, then polish
    {
      auto h = h0;
      bool settled = false;
      for (int it = 0; it < opt.max_iter; ++it) {
        auto F = f_map(h, params);
        double delta = 0.0;
        for (int i = 0; i < m; ++i) {
          double hn = (1.0 - opt.damping) * h[i] + opt.damping * params.k * F[i];
          delta = std::max(delta, std::abs(hn - h[i]));
          h[i] = hn;
        }
        if (delta < opt.tol) {
          settled = true;
          break;
        }
        double hn = 0.0;
        for (double v : h) hn = std::max(hn, std::abs(v));
        if (hn > 200.0) break;  // diverging orbit
      }
      if (settled) {
        solver.newton(h, opt.newton_iter, opt.tol);
        any |= record(h);
      }
    }
    if (!any) ++out.non_converged;
  }

  std::sort(found.begin(), found.end());
  for (const auto& h : found) {
    LawVector lv;
    lv.z.resize(m);
    for (int i = 0; i < m; ++i) lv.z[i] = std::exp(h[i]);
    lv.residual = ti_residual(lv.z, params);
    out.points.push_back(std::move(lv));
  }
  return out;
}

}  // namespace psos
