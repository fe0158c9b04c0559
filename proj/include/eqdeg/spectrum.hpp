#pragma once

#include <map>
#include <utility>
#include <vector>

namespace eqdeg {

struct PhysicalParams {
  double g = 1.0;
  double g_tilde = 2.0;

  /// Throws DomainError unless 0 < g < g_tilde.
  PhysicalParams(double g, double g_tilde);
};

struct SpectralLine {
  int k = 0;
  int m = 0;
  double s = 0.0;
  int mult = 1;         ///< 2k+1
  double mu_crit = 0.0;
  double residual = 0.0;  ///< |k-th derivative factor at s|, spherical form

  double s2() const { return s * s; }
};

struct SpectrumOptions {
  int kmax = 12;
  int mmax = 20;
  double scan_step = 0.05;
  double root_tol = 1e-12;
  double x_max = 60.0;    ///< initial scan window, extended up to 100
};

/// j_k(x) and j_k'(x).
std::pair<double, double> spherical_bessel(int k, double x);

/// lambda * j_k'(lambda): a positive multiple of the radial derivative of
/// r^{-1/2} J_{k+1/2}(lambda r) at r = 1, with the same zeros.
double psi_k(int k, double lambda);

/// Radial derivative of r^{-1/2} J_{k+1/2}(lambda r) at r = 1 by central
/// differences of std::cyl_bessel_j; used to cross-check psi_k.
double psi_k_half_integer(int k, double lambda, double h = 1e-6);

/// First `mmax` positive zeros of psi_k for k = 0..kmax, plus s_00 = 0.
/// Lines are ordered by (k, m) with m starting at 1 (0 only for k = 0).
std::vector<SpectralLine> neumann_eigenvalues(const SpectrumOptions &options = {});

/// mu_km = (g + 3 g~) / (2 (g~ - g)) s_km^2.
double critical_value(const PhysicalParams &p, double s);
void critical_values(const PhysicalParams &p, std::vector<SpectralLine> &lines);

struct HessianLine {
  int k = 0;
  int m = 0;
  double xi = 0.0;   ///< multiplicity 3(2k+1)
  double eta = 0.0;  ///< multiplicity 2k+1
  int xi_mult = 0;
  int eta_mult = 0;
};

struct HessianSpectrum {
  double mu = 0.0;
  double c_sq = 0.0;
  std::vector<HessianLine> lines;
};

HessianSpectrum hessian_spectrum(const PhysicalParams &p, double mu,
                                 const std::vector<SpectralLine> &lines);

struct SimplicityReport {
  std::vector<bool> simple;                  ///< per line
  std::vector<std::vector<int>> groups;      ///< indices of lines with equal s^2
};

SimplicityReport simplicity_report(const std::vector<SpectralLine> &lines, double rel_tol = 1e-9);

/// Lines with mu_crit < mu, counted per angular index k. Throws DomainError
/// when mu lies on a critical value or beyond what the lines cover.
std::map<int, int> negative_multiplicities(const PhysicalParams &p, double mu,
                                           const std::vector<SpectralLine> &lines);

/// Largest mu below which every critical value is guaranteed present in
/// `lines` (needs the line set of neumann_eigenvalues).
double coverage_bound(const PhysicalParams &p, const std::vector<SpectralLine> &lines);

} // namespace eqdeg
