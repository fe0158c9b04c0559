#include <gtest/gtest.h>

#include <sstream>

#include "eqdeg/error.hpp"
#include "eqdeg/labels.hpp"
#include "eqdeg/lattice.hpp"
#include "oracles.hpp"

using namespace eqdeg;

namespace {

using oracle::as_set;

} // namespace

class LatticeVsOracle : public ::testing::TestWithParam<std::pair<const char *, std::size_t>> {};

TEST_P(LatticeVsOracle, ClassesAndSizesMatchExhaustiveSearch)
{
  auto [name, expected] = GetParam();
  auto g = build_group(name);
  auto lat = SubgroupLattice::enumerate(g);
  auto classes = oracle::subgroup_classes(*g);
  ASSERT_EQ(lat.size(), expected);
  ASSERT_EQ(classes.size(), expected);
  std::multiset<std::pair<std::size_t, std::size_t>> a, b;
  for (const auto &c : lat.classes())
    a.insert({c.order(), c.class_size});
  for (const auto &c : classes)
    b.insert({oracle::count(*c.begin()), c.size()});
  EXPECT_EQ(a, b);
  for (const auto &c : lat.classes()) {
    bool found = false;
    for (const auto &oc : classes)
      found = found || oc.count(as_set(c.rep));
    EXPECT_TRUE(found);
    EXPECT_EQ(c.normalizer.order(), oracle::normalizer_order(*g, as_set(c.rep)));
    EXPECT_EQ(c.weyl_order * c.order(), c.normalizer.order());
  }
}

INSTANTIATE_TEST_SUITE_P(SmallGroups, LatticeVsOracle,
                         ::testing::Values(std::pair{"Z2xZ2", 5}, std::pair{"S4", 11},
                                           std::pair{"D4xZ2", 27}, std::pair{"S4p", 33},
                                           std::pair{"A4", 5}, std::pair{"S5", 19}),
                         [](const auto &info) { return std::string(info.param.first); });

TEST(Lattice, OrderingAndEnds)
{
  auto lat = SubgroupLattice::enumerate(build_group("S4p"));
  EXPECT_EQ(lat[0].order(), 1u);
  EXPECT_EQ(lat[std::size_t(lat.top())].order(), 48u);
  for (std::size_t i = 1; i < lat.size(); ++i)
    EXPECT_LE(lat[i - 1].order(), lat[i].order());
}

TEST(Lattice, NCountsMatchBruteForce)
{
  auto g = build_group("S4p");
  auto lat = SubgroupLattice::enumerate(g);
  for (std::size_t l = 0; l < lat.size(); ++l)
    for (std::size_t h = 0; h < lat.size(); ++h)
      ASSERT_EQ(lat.n_count(int(l), int(h)),
                oracle::n_count(*g, as_set(lat[l].rep), as_set(lat[h].rep)))
          << l << " " << h;
}

TEST(Lattice, LeqIsAPartialOrder)
{
  auto lat = SubgroupLattice::enumerate(build_group("S4p"));
  int n = int(lat.size());
  for (int a = 0; a < n; ++a) {
    EXPECT_TRUE(lat.leq(a, a));
    EXPECT_TRUE(lat.leq(0, a));
    EXPECT_TRUE(lat.leq(a, lat.top()));
    for (int b = 0; b < n; ++b) {
      if (a != b && lat.leq(a, b)) {
        EXPECT_FALSE(lat.leq(b, a));
        EXPECT_EQ(lat[std::size_t(b)].order() % lat[std::size_t(a)].order(), 0u);
      }
      for (int c = 0; c < n; ++c)
        if (lat.leq(a, b) && lat.leq(b, c))
          ASSERT_TRUE(lat.leq(a, c));
    }
  }
}

TEST(Lattice, ClassOfRecognisesConjugates)
{
  auto g = build_group("S4");
  auto lat = SubgroupLattice::enumerate(g);
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t x = 0; x < g->order(); x += 5)
      EXPECT_EQ(lat.class_of(conjugate(*g, lat[i].rep, Elem(x))), int(i));
  ElementSet not_a_group(g->order());
  not_a_group.insert(0);
  not_a_group.insert(1);
  not_a_group.insert(2);
  EXPECT_EQ(lat.class_of(not_a_group), -1);
}

TEST(Lattice, FromRepresentativesMatchesEnumeration)
{
  auto g = build_group("S4");
  auto lat = SubgroupLattice::enumerate(g);
  std::vector<Subgroup> reps;
  for (std::size_t i = 0; i < lat.size(); ++i)
    reps.push_back(Subgroup(conjugate(*g, lat[i].rep, Elem(7))));
  auto other = SubgroupLattice::from_representatives(g, reps);
  ASSERT_EQ(other.size(), lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i)
    EXPECT_EQ(other[i].rep, lat[i].rep);
}

TEST(Lattice, CacheRoundTrip)
{
  auto g = build_group("S4p");
  auto lat = SubgroupLattice::enumerate(g);
  std::stringstream buf;
  lat.save(buf, "v-test");
  auto text = buf.str();

  std::istringstream in(text);
  auto back = SubgroupLattice::load(g, in, "v-test");
  ASSERT_TRUE(back.has_value());
  ASSERT_EQ(back->size(), lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    EXPECT_EQ(back->classes()[i].rep, lat[i].rep);
    EXPECT_EQ(back->classes()[i].weyl_order, lat[i].weyl_order);
  }

  std::istringstream stale(text);
  EXPECT_FALSE(SubgroupLattice::load(g, stale, "v-other").has_value());

  std::istringstream wrong_group(text);
  EXPECT_FALSE(SubgroupLattice::load(build_group("S4"), wrong_group, "v-test").has_value());

  auto truncated = text.substr(0, text.size() / 2);
  std::istringstream cut(truncated);
  EXPECT_FALSE(SubgroupLattice::load(g, cut, "v-test").has_value());
}

TEST(Lattice, MaximalOfSubset)
{
  auto g = build_group("S4");
  auto lat = SubgroupLattice::enumerate(g);
  apply_labels(lat);
  std::vector<int> subset{lat.require("D1"), lat.require("D2"), lat.require("D3"),
                          lat.require("Z2")};
  auto max = lat.maximal(subset);
  std::set<std::string> names;
  for (int i : max)
    names.insert(lat[std::size_t(i)].name());
  EXPECT_EQ(names, (std::set<std::string>{"D2", "D3"}));
}
