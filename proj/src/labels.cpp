#include "eqdeg/labels.hpp"

#include <algorithm>

#include "eqdeg/error.hpp"

namespace eqdeg {

const std::vector<NamedS4Subgroup> &s4_subgroup_table()
{
  static const std::vector<NamedS4Subgroup> table{
      {"Z1", {"(1)"}},
      {"Z2", {"(1)", "(12)(34)"}},
      {"D1", {"(1)", "(12)"}},
      {"Z3", {"(1)", "(123)", "(132)"}},
      {"V4", {"(1)", "(12)(34)", "(13)(24)", "(14)(23)"}},
      {"D2", {"(1)", "(12)(34)", "(12)", "(34)"}},
      {"Z4", {"(1)", "(1324)", "(12)(34)", "(1423)"}},
      {"D3", {"(1)", "(123)", "(132)", "(12)", "(23)", "(13)"}},
      {"D4", {"(1)", "(1324)", "(12)(34)", "(1423)", "(34)", "(14)(23)", "(12)", "(13)(24)"}},
      {"A4",
       {"(1)", "(12)(34)", "(123)", "(132)", "(13)(24)", "(142)", "(124)", "(14)(23)", "(134)",
        "(143)", "(243)", "(234)"}},
      {"S4", {}},
  };
  return table;
}

namespace {

const NamedS4Subgroup &lookup_s4(std::string_view name)
{
  for (const auto &row : s4_subgroup_table())
    if (row.name == name)
      return row;
  throw ConfigError("unknown S4 subgroup name: " + std::string(name));
}

std::vector<Permutation> s4_elements(std::string_view name)
{
  std::vector<Permutation> out;
  const auto &row = lookup_s4(name);
  if (row.cycles.empty()) {
    Permutation p{{0, 1, 2, 3}};
    do
      out.push_back(p);
    while (std::next_permutation(p.images.begin(), p.images.end()));
    return out;
  }
  for (const auto &c : row.cycles)
    out.push_back(parse_cycles(c, 4));
  return out;
}

} // namespace

Subgroup s4_subgroup(const Group &s4, std::string_view name)
{
  ElementSet s(s4.order());
  for (const auto &p : s4_elements(name)) {
    int idx = s4.find(p);
    if (idx < 0)
      throw ConfigError(s4.name() + " is not S4 on four points");
    s.insert(Elem(idx));
  }
  return Subgroup(std::move(s));
}

Subgroup s4p_subgroup(const Group &s4p, std::string_view h, std::string_view kernel, bool product)
{
  auto kernel_elems = s4_elements(kernel);
  ElementSet s(s4p.order());
  auto add = [&](const Matrix3 &m) {
    int idx = s4p.find(m);
    if (idx < 0)
      throw ConfigError(s4p.name() + " is not the group of signed permutation matrices");
    s.insert(Elem(idx));
  };
  for (const auto &p : s4_elements(h)) {
    Matrix3 r = octahedral_rotation(p);
    Matrix3 neg = r;
    for (int &x : neg)
      x = -x;
    if (product) {
      add(r);
      add(neg);
    } else {
      bool in_kernel = std::find(kernel_elems.begin(), kernel_elems.end(), p) != kernel_elems.end();
      add(in_kernel ? r : neg);
    }
  }
  return Subgroup(std::move(s));
}

const std::vector<S4pEntry> &s4p_subgroup_table()
{
  static const std::vector<S4pEntry> table = [] {
    std::vector<S4pEntry> t;
    for (const auto &row : s4_subgroup_table()) {
      t.push_back({row.name + "p", row.name, row.name, true});
      t.push_back({row.name, row.name, row.name, false});
    }
    // D4 -> Z2 with kernel V4 is a class of its own; it gets a name in the
    // same spirit as the others.
    const std::vector<S4pEntry> twisted{
        {"S4-", "S4", "A4", false},  {"D4z", "D4", "Z4", false}, {"D4d", "D4", "D2", false},
        {"D4v", "D4", "V4", false}, {"D3z", "D3", "Z3", false}, {"D2z", "D2", "Z2", false},
        {"D2d", "D2", "D1", false},  {"V4-", "V4", "Z2", false}, {"D1z", "D1", "Z1", false},
        {"Z4d", "Z4", "Z2", false},  {"Z2-", "Z2", "Z1", false},
    };
    t.insert(t.end(), twisted.begin(), twisted.end());
    return t;
  }();
  return table;
}

void apply_labels(SubgroupLattice &lattice)
{
  const Group &g = lattice.group();
  auto assign = [&](const Subgroup &h, const std::string &label) {
    int c = lattice.class_of(h.members());
    if (c < 0)
      throw InternalError("dictionary subgroup " + label + " missing from the lattice of " +
                          g.name());
    if (!lattice[std::size_t(c)].auto_label)
      throw InternalError("dictionary subgroups " + lattice[std::size_t(c)].label + " and " +
                          label + " are conjugate");
    lattice.set_label(c, label, false);
  };

  if (g.name() == "S4") {
    for (const auto &row : s4_subgroup_table())
      assign(s4_subgroup(g, row.name), row.name);
  } else if (g.name() == "S4p") {
    for (const auto &row : s4p_subgroup_table())
      assign(s4p_subgroup(g, row.h, row.kernel, row.product), row.label);
  } else {
    lattice.set_label(0, "Z1", false);
    lattice.set_label(lattice.top(), g.name(), false);
  }
}

std::string small_group_name(std::span<const int> element_orders)
{
  std::size_t n = element_orders.size();
  auto count = [&](int k) {
    return std::size_t(std::count(element_orders.begin(), element_orders.end(), k));
  };
  switch (n) {
  case 1: return "Z1";
  case 2: return "Z2";
  case 3: return "Z3";
  case 4: return count(4) ? "Z4" : "D2";
  case 6:
    if (count(2) == 3)
      return "D3";
    break;
  case 8:
    if (count(2) == 5 && count(4) == 2)
      return "D4";
    break;
  case 12:
    if (count(2) == 3 && count(3) == 8)
      return "A4";
    break;
  case 24:
    if (count(2) == 9 && count(3) == 8 && count(4) == 6)
      return "S4";
    break;
  default: break;
  }
  return "L" + std::to_string(n);
}

} // namespace eqdeg
