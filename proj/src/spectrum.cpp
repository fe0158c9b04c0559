#include "eqdeg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eqdeg/error.hpp"

namespace eqdeg {

PhysicalParams::PhysicalParams(double g_, double g_tilde_) : g(g_), g_tilde(g_tilde_)
{
  if (!(g > 0.0 && g < g_tilde))
    throw DomainError("immiscibility requires 0 < g < g_tilde (got g = " + std::to_string(g) +
                      ", g_tilde = " + std::to_string(g_tilde) + ")");
}

std::pair<double, double> spherical_bessel(int k, double x)
{
  if (k < 0 || k > 13)
    throw DomainError("spherical Bessel order must lie in [0, 13]");
  if (!(x > 0.0))
    throw DomainError("spherical Bessel argument must be positive");
  unsigned uk = unsigned(k);
  double jk = std::sph_bessel(uk, x);
  if (k == 0)
    return {jk, -std::sph_bessel(1u, x)};
  return {jk, std::sph_bessel(uk - 1, x) - double(k + 1) / x * jk};
}

double psi_k(int k, double lambda)
{
  return lambda * spherical_bessel(k, lambda).second;
}

double psi_k_half_integer(int k, double lambda, double h)
{
  auto f = [&](double r) {
    return std::pow(r, -0.5) * std::cyl_bessel_j(double(k) + 0.5, lambda * r);
  };
  return (f(1.0 + h) - f(1.0 - h)) / (2.0 * h);
}

namespace {

double bisect(int k, double a, double b, double tol)
{
  double fa = psi_k(k, a);
  while (b - a > tol) {
    double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b)
      break;
    double fm = psi_k(k, mid);
    if (fm == 0.0)
      return mid;
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> positive_zeros(int k, int count, double step, double tol, double x_max)
{
  constexpr double hard_limit = 100.0;
  std::vector<double> roots;
  double x = 1e-3;
  double fx = psi_k(k, x);
  while (int(roots.size()) < count) {
    double y = x + step;
    if (y > x_max) {
      if (x_max >= hard_limit)
        throw DomainError("fewer than " + std::to_string(count) + " zeros of psi_" +
                          std::to_string(k) + " below " + std::to_string(hard_limit));
      x_max = std::min(hard_limit, x_max + 20.0);
      continue;
    }
    double fy = psi_k(k, y);
    if (fy == 0.0 || (fx < 0) != (fy < 0))
      roots.push_back(fy == 0.0 ? y : bisect(k, x, y, tol));
    x = y;
    fx = fy;
  }
  return roots;
}

// Zeros of j_k' increase with k for k >= 1, and zeros of j_0' = -j_1
// sit between consecutive zeros of j_1'.
bool interlaced(const std::vector<std::vector<double>> &z)
{
  for (std::size_t k = 1; k + 1 < z.size(); ++k)
    for (std::size_t m = 0; m < z[k].size(); ++m)
      if (!(z[k][m] < z[k + 1][m]))
        return false;
  if (z.size() > 1)
    for (std::size_t m = 0; m < z[0].size(); ++m) {
      if (!(z[1][m] < z[0][m]))
        return false;
      if (m + 1 < z[1].size() && !(z[0][m] < z[1][m + 1]))
        return false;
    }
  return true;
}

} // namespace

std::vector<SpectralLine> neumann_eigenvalues(const SpectrumOptions &o)
{
  if (o.kmax < 0 || o.kmax > 12 || o.mmax < 1 || o.mmax > 20)
    throw DomainError("spectrum limited to 0 <= kmax <= 12 and 1 <= mmax <= 20");
  double step = o.scan_step;
  std::vector<std::vector<double>> zeros;
  for (int attempt = 0;; ++attempt) {
    zeros.clear();
    for (int k = 0; k <= o.kmax; ++k)
      zeros.push_back(positive_zeros(k, o.mmax, step, o.root_tol, o.x_max));
    if (interlaced(zeros))
      break;
    if (attempt == 4)
      throw InternalError("zeros of psi_k fail the interlacing check after refining the scan");
    step /= 2;
  }

  std::vector<SpectralLine> lines;
  lines.push_back({0, 0, 0.0, 1, 0.0, 0.0});
  for (int k = 0; k <= o.kmax; ++k)
    for (int m = 1; m <= o.mmax; ++m) {
      double s = zeros[std::size_t(k)][std::size_t(m - 1)];
      lines.push_back({k, m, s, 2 * k + 1, 0.0, std::abs(psi_k(k, s))});
    }
  return lines;
}

double critical_value(const PhysicalParams &p, double s)
{
  return (p.g + 3.0 * p.g_tilde) / (2.0 * (p.g_tilde - p.g)) * s * s;
}

void critical_values(const PhysicalParams &p, std::vector<SpectralLine> &lines)
{
  for (auto &l : lines)
    l.mu_crit = critical_value(p, l.s);
}

HessianSpectrum hessian_spectrum(const PhysicalParams &p, double mu,
                                 const std::vector<SpectralLine> &lines)
{
  if (!(mu > 0.0))
    throw DomainError("the Hessian spectrum needs mu > 0");
  HessianSpectrum h{mu, mu / (p.g + 3.0 * p.g_tilde), {}};
  for (const auto &l : lines) {
    double s2 = l.s2();
    h.lines.push_back({l.k, l.m, (s2 + 2.0 * h.c_sq * (p.g - p.g_tilde)) / (s2 + 1.0),
                       (s2 + 2.0 * h.c_sq * (p.g + 3.0 * p.g_tilde)) / (s2 + 1.0),
                       3 * (2 * l.k + 1), 2 * l.k + 1});
  }
  return h;
}

SimplicityReport simplicity_report(const std::vector<SpectralLine> &lines, double rel_tol)
{
  std::vector<int> order(lines.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return lines[std::size_t(a)].s2() < lines[std::size_t(b)].s2();
  });
  SimplicityReport r;
  r.simple.assign(lines.size(), true);
  for (std::size_t i = 0; i < order.size();) {
    std::vector<int> group{order[i]};
    std::size_t j = i + 1;
    while (j < order.size()) {
      double a = lines[std::size_t(order[j - 1])].s2();
      double b = lines[std::size_t(order[j])].s2();
      if (std::abs(b - a) > rel_tol * std::max(std::abs(a), std::abs(b)))
        break;
      group.push_back(order[j++]);
    }
    if (group.size() > 1)
      for (int g : group)
        r.simple[std::size_t(g)] = false;
    r.groups.push_back(std::move(group));
    i = j;
  }
  return r;
}

double coverage_bound(const PhysicalParams &p, const std::vector<SpectralLine> &lines)
{
  int kmax = -1;
  for (const auto &l : lines)
    kmax = std::max(kmax, l.k);
  if (kmax < 0)
    return 0.0;
  // Missing lines lie above the last computed root of each k, or belong to
  // k > kmax and so lie above the first root of kmax + 1.
  double s_bound = positive_zeros(kmax + 1, 1, 0.05, 1e-12, 60.0).front();
  for (int k = 0; k <= kmax; ++k) {
    double last = -1.0;
    for (const auto &l : lines)
      if (l.k == k)
        last = std::max(last, l.s);
    s_bound = std::min(s_bound, last);
  }
  return critical_value(p, s_bound);
}

std::map<int, int> negative_multiplicities(const PhysicalParams &p, double mu,
                                           const std::vector<SpectralLine> &lines)
{
  if (!(mu > 0.0))
    throw DomainError("mu must be positive");
  if (mu > coverage_bound(p, lines))
    throw DomainError("mu = " + std::to_string(mu) +
                      " exceeds the range covered by the computed spectrum");
  std::map<int, int> out;
  for (const auto &l : lines) {
    double mu_l = critical_value(p, l.s);
    if (std::abs(mu_l - mu) <= 1e-12 * std::max(1.0, mu))
      throw DomainError("mu lies on the critical set (k = " + std::to_string(l.k) +
                        ", m = " + std::to_string(l.m) + ")");
    if (mu_l < mu)
      ++out[l.k];
  }
  return out;
}

} // namespace eqdeg
