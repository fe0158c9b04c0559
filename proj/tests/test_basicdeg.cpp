#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "eqdeg/basicdeg.hpp"
#include "eqdeg/workspace.hpp"
#include "oracles.hpp"

using namespace eqdeg;

namespace {

using oracle::as_set;

/// Recurrence over every class with brute-force counts n(L, K), fixed
/// dimensions from the character average and sign (-1)^dim.
std::map<int, std::int64_t> degree_oracle(const RepHandle &rep, const SubgroupLattice &lat)
{
  const auto &g = lat.group();
  auto chi = rep.character();
  int n = int(lat.size());
  std::vector<std::int64_t> coeff(std::size_t(n), 0);
  for (int l = n - 1; l >= 0; --l) {
    const auto &cl = lat[std::size_t(l)];
    long sum = 0;
    for (Elem h : cl.rep.elements())
      sum += chi(h);
    int dim = int(sum / long(cl.order()));
    std::int64_t rhs = dim % 2 ? -1 : 1;
    for (int k = l + 1; k < n; ++k) {
      if (!coeff[std::size_t(k)])
        continue;
      const auto &ck = lat[std::size_t(k)];
      rhs -= coeff[std::size_t(k)] *
             std::int64_t(oracle::n_count(g, as_set(cl.rep), as_set(ck.rep)) * ck.weyl_order);
    }
    EXPECT_EQ(rhs % std::int64_t(cl.weyl_order), 0);
    coeff[std::size_t(l)] = rhs / std::int64_t(cl.weyl_order);
  }
  std::map<int, std::int64_t> out;
  for (int l = 0; l < n; ++l)
    if (coeff[std::size_t(l)])
      out[l] = coeff[std::size_t(l)];
  return out;
}

std::string read_file(const std::string &path)
{
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST(BasicDegree, W4OverS4)
{
  Workspace ws;
  const auto &d = ws.basic_degree("S4", "W4");
  EXPECT_EQ(d.value.to_string(), "(S4) - 2(D3) - (D2) + 3(D1) - (Z1)");
  auto lat = ws.lattice("S4");
  EXPECT_EQ(d.value.coeff(lat->require("D2")), -1);
  EXPECT_EQ(d.value.coeff(lat->require("D3")), -2);
  EXPECT_EQ(d.value.coeff(lat->require("D1")), 3);
  EXPECT_EQ(d.value.coeff(lat->require("Z1")), -1);
}

TEST(BasicDegree, W3mOverS4p)
{
  Workspace ws;
  const auto &d = ws.basic_degree("S4p", "W3m");
  EXPECT_EQ(d.value.to_string(), "(S4p) - (D4z) - (D3z) - (D2d) + 2(D1z) + (Z2-) - (Z1)");
}

TEST(BasicDegree, TensorOverS4pTimesS4MaximalClasses)
{
  Workspace ws;
  const auto &d = ws.basic_degree("S4pxS4", "W3mxW4");
  auto lat = ws.lattice("S4pxS4");
  EXPECT_EQ(d.value.coeff(lat->top()), 1);
  const std::set<std::string> listed{
      "D3 x_{D3} D3",          "D2p^{D2d} x^{D1} D2",    "D4p^{Z2-} x_{D4} D4_1",
      "D4p^{Z2-} x_{D4} D4_2", "D2d x D3",               "D3p^{D3z} x^{D1} D2",
      "S4- x_{S4} S4",         "D2p^{D2d} x^{D2} D4",    "D4p^{D4z} x^{D1} D2",
      "D3z x D3",              "D4z x D3",               "D3p^{D3z} x^{D2} D4",
      "D4p^{D4z} x^{D2} D4"};
  auto rest = d.value - RingElement::unit(lat);
  std::set<std::string> maximal;
  for (int c : max_part(rest)) {
    maximal.insert((*lat)[std::size_t(c)].name());
    EXPECT_EQ(rest.coeff(c), -1) << (*lat)[std::size_t(c)].name();
    EXPECT_EQ((*lat)[std::size_t(c)].weyl_order, 2u);
  }
  EXPECT_EQ(maximal, listed);
  EXPECT_EQ(d.value.coeffs().size(), 84u);
  EXPECT_EQ(d.orbit_types.classes.size(), 86u);
}

TEST(BasicDegree, TensorDegreeMatchesGoldenFile)
{
  Workspace ws;
  const auto &d = ws.basic_degree("S4pxS4", "W3mxW4");
  auto lat = ws.lattice("S4pxS4");
  std::ostringstream out;
  std::vector<int> support;
  for (const auto &[c, v] : d.value.coeffs())
    support.push_back(c);
  for (int c : print_order(*lat, support))
    out << d.value.coeff(c) << '\t' << (*lat)[std::size_t(c)].order() << '\t'
        << (*lat)[std::size_t(c)].name() << '\n';
  EXPECT_EQ(out.str(), read_file(std::string(EQDEG_TEST_DATA_DIR) + "/deg_W3mxW4.tsv"));
}

TEST(BasicDegree, MatchesBruteForceRecurrence)
{
  Workspace ws;
  for (auto [group, rep] : {std::pair{"S4", "W1"}, {"S4", "W2"}, {"S4", "W3"}, {"S4", "W4"},
                            {"S4", "R4"}, {"S4p", "W3m"}}) {
    SCOPED_TRACE(rep);
    auto lat = ws.lattice(group);
    auto r = ws.rep(group, rep);
    const auto &d = ws.basic_degree(group, rep);
    EXPECT_EQ(d.value.coeffs(), degree_oracle(r, *lat));
    EXPECT_EQ(d.value, basic_degree_oracle(r, lat));
    EXPECT_EQ(d.value, basic_degree_all_classes(r, lat));
  }
}

TEST(BasicDegree, AllClassesRecurrenceAgreesOnTheProduct)
{
  Workspace ws;
  auto lat = ws.lattice("S4pxS4");
  const auto &d = ws.basic_degree("S4pxS4", "W3mxW4");
  EXPECT_EQ(d.value, basic_degree_all_classes(ws.rep("S4pxS4", "W3mxW4"), lat));
}

TEST(BasicDegree, Involutive)
{
  Workspace ws;
  for (auto [group, rep] : {std::pair{"S4", "W0"}, {"S4", "W1"}, {"S4", "W2"}, {"S4", "W3"},
                            {"S4", "W4"}, {"S4p", "W3m"}, {"S4pxS4", "W3mxW4"}}) {
    SCOPED_TRACE(rep);
    const auto &d = ws.basic_degree(group, rep);
    EXPECT_EQ(mul(d.value, d.value), RingElement::unit(ws.lattice(group)));
  }
}

TEST(BasicDegree, TrivialRepresentationIsMinusUnit)
{
  Workspace ws;
  const auto &d = ws.basic_degree("S4", "W0");
  EXPECT_EQ(d.value, -RingElement::unit(ws.lattice("S4")));
}

TEST(BasicDegree, LeadingCoefficients)
{
  Workspace ws;
  for (auto [group, rep] : {std::pair{"S4", "W4"}, {"S4p", "W3m"}, {"S4pxS4", "W3mxW4"}}) {
    SCOPED_TRACE(rep);
    auto checks = leading_coefficients_check(ws.basic_degree(group, rep));
    EXPECT_FALSE(checks.empty());
    for (const auto &c : checks)
      EXPECT_TRUE(c.ok) << c.cls;
  }
}

TEST(BasicDegree, LinearMapDegree)
{
  Workspace ws;
  auto lat = ws.lattice("S4");
  const auto &w4 = ws.basic_degree("S4", "W4");
  const auto &w3 = ws.basic_degree("S4", "W3");
  EXPECT_EQ(linear_map_degree(lat, {}), RingElement::unit(lat));
  EXPECT_EQ(linear_map_degree(lat, {{&w4, 2}}), RingElement::unit(lat));
  EXPECT_EQ(linear_map_degree(lat, {{&w4, 3}}), w4.value);
  EXPECT_EQ(linear_map_degree(lat, {{&w4, 1}, {&w3, 1}}), mul(w4.value, w3.value));
}
