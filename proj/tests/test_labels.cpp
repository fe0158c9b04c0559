#include <gtest/gtest.h>

#include "eqdeg/error.hpp"
#include "eqdeg/labels.hpp"
#include "eqdeg/lattice.hpp"
#include "oracles.hpp"
#include "subgroup_tables.hpp"

using namespace eqdeg;
using namespace tables;

namespace {

using oracle::as_set;

} // namespace

TEST(Labels, S4DictionaryCoversEveryClassOnce)
{
  auto g = build_group("S4");
  auto lat = SubgroupLattice::enumerate(g);
  apply_labels(lat);
  std::set<std::string> names;
  for (const auto &c : lat.classes()) {
    EXPECT_FALSE(c.auto_label) << c.label;
    names.insert(c.name());
  }
  EXPECT_EQ(names.size(), 11u);
  EXPECT_EQ(lat[std::size_t(lat.require("D4"))].weyl_order, 1u);
  EXPECT_EQ(lat[std::size_t(lat.require("V4"))].weyl_order, 6u);
  EXPECT_EQ(lat[std::size_t(lat.require("D1"))].weyl_order, 2u);
  EXPECT_THROW(lat.require("Q8"), ConfigError);
}

TEST(Labels, S4pDictionaryCoversEveryClassOnce)
{
  auto lat = SubgroupLattice::enumerate(build_group("S4p"));
  apply_labels(lat);
  std::set<std::string> names;
  for (const auto &c : lat.classes()) {
    EXPECT_FALSE(c.auto_label) << c.label;
    names.insert(c.name());
  }
  EXPECT_EQ(names.size(), 33u);
  EXPECT_EQ(s4p_subgroup_table().size(), 33u);
}

TEST(Labels, NormalizersAndWeylGroupsInS4p)
{
  auto g = build_group("S4p");
  auto lat = SubgroupLattice::enumerate(g);
  apply_labels(lat);
  for (const auto &row : rows) {
    SCOPED_TRACE(row.label);
    const auto &c = lat[std::size_t(lat.require(row.label))];
    int n = lat.class_of(c.normalizer.members());
    ASSERT_GE(n, 0);
    // The normalizer is the listed subgroup itself, not just a conjugate.
    EXPECT_EQ(lat[std::size_t(n)].name(), row.normalizer);
    auto w = oracle::quotient_element_orders(*g, as_set(c.normalizer), as_set(c.rep));
    EXPECT_EQ(w, weyl_profiles().at(row.weyl)) << "Weyl group " << row.weyl;
    EXPECT_EQ(c.weyl_order, w.size());
  }
}

TEST(Labels, ExtraDihedralClassWithKleinKernel)
{
  // D4 twisted by the kernel V4 is a class of its own, distinct from D4d.
  auto lat = SubgroupLattice::enumerate(build_group("S4p"));
  apply_labels(lat);
  const auto &c = lat[std::size_t(lat.require("D4v"))];
  EXPECT_EQ(c.order(), 8u);
  EXPECT_EQ(c.weyl_order, 2u);
  EXPECT_NE(lat.require("D4v"), lat.require("D4d"));
}

TEST(Labels, SmallGroupNames)
{
  auto names = [](std::map<int, int> counts) {
    auto p = profile(counts);
    return small_group_name(p);
  };
  EXPECT_EQ(names({{1, 1}}), "Z1");
  EXPECT_EQ(names({{1, 1}, {2, 1}}), "Z2");
  EXPECT_EQ(names({{1, 1}, {2, 3}}), "D2");
  EXPECT_EQ(names({{1, 1}, {2, 1}, {4, 2}}), "Z4");
  EXPECT_EQ(names({{1, 1}, {2, 3}, {3, 2}}), "D3");
  EXPECT_EQ(names({{1, 1}, {2, 5}, {4, 2}}), "D4");
  EXPECT_EQ(names({{1, 1}, {2, 3}, {3, 8}}), "A4");
  EXPECT_EQ(names({{1, 1}, {2, 9}, {3, 8}, {4, 6}}), "S4");
  EXPECT_EQ(names({{1, 1}, {2, 7}}), "L8");
}
