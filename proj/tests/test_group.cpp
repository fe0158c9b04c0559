#include <gtest/gtest.h>

#include "eqdeg/error.hpp"
#include "eqdeg/group.hpp"

using namespace eqdeg;

namespace {

void expect_group_axioms(const Group &g)
{
  const auto n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    EXPECT_EQ(g.mul(0, Elem(a)), a);
    EXPECT_EQ(g.mul(Elem(a), 0), a);
    EXPECT_EQ(g.mul(Elem(a), g.inv(Elem(a))), 0);
    std::vector<bool> row(n, false);
    for (std::size_t b = 0; b < n; ++b)
      row[g.mul(Elem(a), Elem(b))] = true;
    EXPECT_EQ(std::count(row.begin(), row.end(), true), long(n)) << "row " << a;
  }
  for (std::size_t a = 0; a < n; a += 3)
    for (std::size_t b = 0; b < n; b += 2)
      for (std::size_t c = 0; c < n; c += 5)
        ASSERT_EQ(g.mul(g.mul(Elem(a), Elem(b)), Elem(c)), g.mul(Elem(a), g.mul(Elem(b), Elem(c))));
}

} // namespace

class GroupAxioms : public ::testing::TestWithParam<std::pair<const char *, std::size_t>> {};

TEST_P(GroupAxioms, CayleyTableIsAGroup)
{
  auto [name, order] = GetParam();
  auto g = build_group(name);
  EXPECT_EQ(g->order(), order);
  expect_group_axioms(*g);
}

INSTANTIATE_TEST_SUITE_P(Descriptors, GroupAxioms,
                         ::testing::Values(std::pair{"S4", 24}, std::pair{"S4p", 48},
                                           std::pair{"A4", 12}, std::pair{"V4", 4},
                                           std::pair{"Z2", 2}, std::pair{"Z5", 5},
                                           std::pair{"D4", 8}, std::pair{"D6", 12},
                                           std::pair{"S5", 120}, std::pair{"Z2xZ2", 4},
                                           std::pair{"D4xZ2", 16}, std::pair{"S4pxS4", 1152}),
                         [](const auto &info) { return std::string(info.param.first); });

TEST(Group, ElementOrderProfileOfS4)
{
  auto g = build_group("S4");
  std::map<int, int> profile;
  for (std::size_t a = 0; a < g->order(); ++a)
    ++profile[g->element_order(Elem(a))];
  EXPECT_EQ(profile, (std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}));
}

TEST(Group, ParseCyclesComposesRightToLeft)
{
  auto p = parse_cycles("(12)", 4);
  auto q = parse_cycles("(23)", 4);
  // p(q(1)) with 0-based images: q sends 1->2, p fixes 2.
  auto pq = compose(p, q);
  EXPECT_EQ(pq.images, (std::vector<std::uint8_t>{1, 2, 0, 3}));
  EXPECT_THROW(parse_cycles("(15)", 4), ConfigError);
  EXPECT_THROW(parse_cycles("12", 4), ConfigError);
}

TEST(Group, S4pIsSignedPermutationMatrices)
{
  auto g = build_group("S4p");
  int with_minus_id = 0;
  for (std::size_t a = 0; a < g->order(); ++a) {
    const auto &m = std::get<Matrix3>(g->tag(Elem(a)));
    int d = determinant(m);
    EXPECT_TRUE(d == 1 || d == -1);
    auto [perm, sign] = octahedral_decompose(m);
    auto r = octahedral_rotation(perm);
    EXPECT_EQ(determinant(r), 1);
    for (int i = 0; i < 9; ++i)
      EXPECT_EQ(m[std::size_t(i)], sign * r[std::size_t(i)]);
    if (m == Matrix3{-1, 0, 0, 0, -1, 0, 0, 0, -1})
      ++with_minus_id;
  }
  EXPECT_EQ(with_minus_id, 1);
}

TEST(Group, OctahedralRotationIsAHomomorphism)
{
  auto s4 = build_group("S4");
  for (std::size_t a = 0; a < s4->order(); ++a)
    for (std::size_t b = 0; b < s4->order(); ++b) {
      const auto &p = std::get<Permutation>(s4->tag(Elem(a)));
      const auto &q = std::get<Permutation>(s4->tag(Elem(b)));
      ASSERT_EQ(octahedral_rotation(compose(p, q)),
                multiply(octahedral_rotation(p), octahedral_rotation(q)));
    }
}

TEST(Group, DirectProductIndexing)
{
  auto g = build_group("D4xZ2");
  ASSERT_TRUE(g->is_product());
  const auto &a = *g->first_factor();
  const auto &b = *g->second_factor();
  for (std::size_t x = 0; x < g->order(); ++x)
    for (std::size_t y = 0; y < g->order(); ++y) {
      auto [x1, x2] = g->split(Elem(x));
      auto [y1, y2] = g->split(Elem(y));
      ASSERT_EQ(g->mul(Elem(x), Elem(y)), g->pair(a.mul(x1, y1), b.mul(x2, y2)));
    }
}

TEST(Group, UnknownDescriptorsAreConfigErrors)
{
  EXPECT_THROW(build_group("Q8"), ConfigError);
  EXPECT_THROW(build_group("S7"), ConfigError);
  EXPECT_THROW(build_group("D2"), ConfigError);
}
