#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "eqdeg/error.hpp"
#include "eqdeg/spectrum.hpp"
#include "oracles.hpp"

using namespace eqdeg;

namespace {

const std::vector<SpectralLine> &default_lines()
{
  static const auto lines = neumann_eigenvalues();
  return lines;
}

const SpectralLine &line(const std::vector<SpectralLine> &lines, int k, int m)
{
  for (const auto &l : lines)
    if (l.k == k && l.m == m)
      return l;
  throw std::runtime_error("missing line");
}

} // namespace

TEST(SphericalBessel, ClosedFormsAndRecurrence)
{
  for (double x : {0.3, 1.0, 2.5, 7.0, 31.0}) {
    auto [j0, dj0] = spherical_bessel(0, x);
    EXPECT_NEAR(j0, std::sin(x) / x, 1e-13);
    auto [j1, dj1] = spherical_bessel(1, x);
    EXPECT_NEAR(j1, std::sin(x) / (x * x) - std::cos(x) / x, 1e-13);
    EXPECT_NEAR(dj0, -j1, 1e-13);
  }
  EXPECT_NEAR(spherical_bessel(0, M_PI).first, 0.0, 1e-15);
  EXPECT_NEAR(spherical_bessel(1, 4.493409457909064).first, 0.0, 1e-13);

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> xs(0.5, 60.0);
  std::uniform_int_distribution<int> ks(1, 11);
  for (int i = 0; i < 50; ++i) {
    double x = xs(rng);
    int k = ks(rng);
    double jm = spherical_bessel(k - 1, x).first, j = spherical_bessel(k, x).first,
           jp = spherical_bessel(k + 1, x).first;
    EXPECT_NEAR(jp, (2 * k + 1) / x * j - jm, 1e-11) << k << " " << x;
  }
}

TEST(SphericalBessel, SmallArgumentIsFinite)
{
  for (int k = 0; k <= 12; ++k) {
    auto [j, dj] = spherical_bessel(k, 1e-6);
    EXPECT_TRUE(std::isfinite(j) && std::isfinite(dj));
  }
}

TEST(Psi, MatchesHalfIntegerBesselForm)
{
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ls(0.5, 40.0);
  std::uniform_int_distribution<int> ks(0, 12);
  for (int i = 0; i < 20; ++i) {
    int k = ks(rng);
    double lambda = ls(rng);
    double a = psi_k(k, lambda), b = oracle::bessel_neumann(k, lambda);
    EXPECT_EQ(a < 0, b < 0) << k << " " << lambda;
    EXPECT_EQ(psi_k_half_integer(k, lambda) < 0, b < 0);
    if (std::abs(b) > 1e-6)
      EXPECT_NEAR(b / a, std::sqrt(2 * lambda / M_PI), 1e-6);
  }
  EXPECT_NE(psi_k(1, 2.0) < 0, psi_k(1, 2.1) < 0);
  for (double x : {0.7, 3.0, 9.5})
    EXPECT_NEAR(psi_k(0, x), (x * std::cos(x) - std::sin(x)) / x, 1e-12);
}

TEST(Spectrum, FirstRootsMatchIndependentBisection)
{
  const auto &lines = default_lines();
  double s01 = oracle::bessel_neumann_zeros(0, 1).front();
  double s11 = oracle::bessel_neumann_zeros(1, 1).front();
  EXPECT_NEAR(line(lines, 0, 1).s, s01, 1e-9);
  EXPECT_NEAR(line(lines, 1, 1).s, s11, 1e-9);
  EXPECT_NEAR(line(lines, 0, 1).s, 4.493409457909064, 1e-9);
  EXPECT_NEAR(line(lines, 1, 1).s, 2.081575977818101, 1e-9);
}

TEST(Spectrum, AllRootsMatchOracleUpToSix)
{
  SpectrumOptions opt;
  opt.kmax = 6;
  opt.mmax = 6;
  auto lines = neumann_eigenvalues(opt);
  EXPECT_EQ(lines.size(), 1u + 7u * 6u);
  for (int k = 0; k <= 6; ++k) {
    auto zeros = oracle::bessel_neumann_zeros(k, 6);
    for (int m = 1; m <= 6; ++m) {
      const auto &l = line(lines, k, m);
      EXPECT_NEAR(l.s, zeros[std::size_t(m - 1)], 1e-9) << k << "," << m;
      EXPECT_LT(l.residual, 1e-10);
      EXPECT_LT(std::abs(psi_k(k, l.s)), 1e-10);
    }
  }
  auto simple = simplicity_report(lines);
  for (bool s : simple.simple)
    EXPECT_TRUE(s);
}

TEST(Spectrum, StructuralInvariants)
{
  const auto &lines = default_lines();
  ASSERT_EQ(lines.size(), 1u + 13u * 20u);
  EXPECT_EQ(lines.front().k, 0);
  EXPECT_EQ(lines.front().m, 0);
  EXPECT_EQ(lines.front().s, 0.0);
  for (const auto &l : lines) {
    EXPECT_EQ(l.mult, 2 * l.k + 1);
    EXPECT_LT(l.residual, 1e-10);
    if (l.s > 0) {
      double d = 1e-8;
      EXPECT_NE(psi_k(l.k, l.s - d) < 0, psi_k(l.k, l.s + d) < 0) << l.k << "," << l.m;
    }
  }
  for (int k = 0; k <= 12; ++k)
    for (int m = 2; m <= 20; ++m)
      EXPECT_LT(line(lines, k, m - 1).s, line(lines, k, m).s);
  // Interlacing; for k = 0 the zeros of j_0' sit between those of j_1'.
  for (int m = 1; m <= 20; ++m) {
    for (int k = 1; k < 12; ++k)
      EXPECT_LT(line(lines, k, m).s, line(lines, k + 1, m).s);
    EXPECT_LT(line(lines, 1, m).s, line(lines, 0, m).s);
    if (m < 20)
      EXPECT_LT(line(lines, 0, m).s, line(lines, 1, m + 1).s);
  }
}

TEST(Spectrum, RejectsOversizedRequests)
{
  SpectrumOptions opt;
  opt.kmax = 13;
  EXPECT_THROW(neumann_eigenvalues(opt), DomainError);
  opt.kmax = 3;
  opt.mmax = 21;
  EXPECT_THROW(neumann_eigenvalues(opt), DomainError);
}

TEST(CriticalValues, Formula)
{
  PhysicalParams p(1.0, 2.0);
  EXPECT_DOUBLE_EQ(critical_value(p, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(critical_value(p, 2.0), 4 * critical_value(p, 1.0));
  EXPECT_DOUBLE_EQ(critical_value(p, 1.0), 3.5);
  auto lines = default_lines();
  critical_values(p, lines);
  const auto &l11 = line(lines, 1, 1);
  EXPECT_NEAR(l11.mu_crit, 3.5 * l11.s * l11.s, 1e-12);
  EXPECT_NEAR(l11.mu_crit, 15.16535, 1e-4);
  // mu ordering follows s ordering
  for (const auto &a : lines)
    for (const auto &b : lines)
      if (a.s < b.s)
        ASSERT_LT(a.mu_crit, b.mu_crit);
}

TEST(CriticalValues, Immiscibility)
{
  EXPECT_THROW(PhysicalParams(2.0, 1.0), DomainError);
  EXPECT_THROW(PhysicalParams(1.0, 1.0), DomainError);
  EXPECT_THROW(PhysicalParams(0.0, 1.0), DomainError);
  EXPECT_NO_THROW(PhysicalParams(0.5, 3.0));
}

TEST(Hessian, SignStructure)
{
  PhysicalParams p(1.0, 2.0);
  auto lines = default_lines();
  critical_values(p, lines);
  for (double mu : {0.5, 20.0, 300.0}) {
    auto h = hessian_spectrum(p, mu, lines);
    EXPECT_NEAR(h.c_sq, mu / 7.0, 1e-14);
    for (const auto &hl : h.lines) {
      EXPECT_GT(hl.eta, 0);
      EXPECT_EQ(hl.xi_mult, 3 * (2 * hl.k + 1));
      EXPECT_EQ(hl.eta_mult, 2 * hl.k + 1);
      if (hl.k == 0 && hl.m == 0)
        EXPECT_NEAR(hl.xi, 2 * h.c_sq * (1.0 - 2.0), 1e-12);
    }
  }
  for (const auto &l : lines) {
    if (l.s == 0)
      continue;
    auto at = hessian_spectrum(p, l.mu_crit, {l});
    EXPECT_NEAR(at.lines[0].xi, 0.0, 1e-10);
    auto below = hessian_spectrum(p, l.mu_crit * (1 - 1e-3), {l});
    auto above = hessian_spectrum(p, l.mu_crit * (1 + 1e-3), {l});
    EXPECT_GT(below.lines[0].xi, 0);
    EXPECT_LT(above.lines[0].xi, 0);
  }
}

TEST(Simplicity, InjectedCoincidence)
{
  auto lines = default_lines();
  auto dup = lines[5];
  dup.k = 99;
  lines.push_back(dup);
  auto r = simplicity_report(lines);
  EXPECT_FALSE(r.simple[5]);
  EXPECT_FALSE(r.simple.back());
  EXPECT_TRUE(r.simple[0]);
}

TEST(NegativeMultiplicities, Counts)
{
  PhysicalParams p(1.0, 2.0);
  auto lines = default_lines();
  critical_values(p, lines);
  double mu11 = line(lines, 1, 1).mu_crit;
  EXPECT_EQ(negative_multiplicities(p, 1.0, lines), (std::map<int, int>{{0, 1}}));
  EXPECT_EQ(negative_multiplicities(p, mu11 + 1e-6, lines), (std::map<int, int>{{0, 1}, {1, 1}}));
  EXPECT_EQ(negative_multiplicities(p, 80.0, lines),
            (std::map<int, int>{{0, 2}, {1, 1}, {2, 1}, {3, 1}}));
  EXPECT_THROW(negative_multiplicities(p, mu11, lines), DomainError);
  EXPECT_THROW(negative_multiplicities(p, 0.0, lines), DomainError);
  EXPECT_THROW(negative_multiplicities(p, 1e9, lines), DomainError);
}

TEST(Coverage, BoundIsBelowFirstMissingValue)
{
  PhysicalParams p(1.0, 2.0);
  auto lines = default_lines();
  double bound = coverage_bound(p, lines);
  double first_missing = oracle::bessel_neumann_zeros(13, 1).front();
  EXPECT_LE(bound, critical_value(p, first_missing) + 1e-9);
  EXPECT_GT(bound, 100.0);
}
