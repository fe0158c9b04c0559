#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqdeg/lattice.hpp"

namespace eqdeg {

/// A named subgroup of S4 given by its elements in cycle notation.
struct NamedS4Subgroup {
  std::string name;
  std::vector<std::string> cycles;
};

/// One representative per conjugacy class of subgroups of S4.
const std::vector<NamedS4Subgroup> &s4_subgroup_table();

/// The named subgroup as a subgroup of a group built by build_group("S4").
Subgroup s4_subgroup(const Group &s4, std::string_view name);

/// Subgroup of S4p = S4 x Z2 (signed permutation matrices) described by a
/// subgroup H of S4 and an index-1 or index-2 kernel: the elements are
/// phi(h) * rotation(h), with phi(h) = +1 on the kernel and -1 off it.
/// `product` selects H x Z2 instead and ignores the kernel.
Subgroup s4p_subgroup(const Group &s4p, std::string_view h, std::string_view kernel,
                      bool product);

/// Row of the S4p dictionary: label, subgroup H of S4, kernel, product flag.
struct S4pEntry {
  std::string label;
  std::string h;
  std::string kernel;
  bool product = false;
};

/// The 33 conjugacy classes of S4p.
const std::vector<S4pEntry> &s4p_subgroup_table();

/// Attach dictionary labels to a lattice of S4 or S4p; for any other group,
/// label the trivial subgroup "Z1" and the whole group by its name. Product
/// groups are named by the goursat module.
void apply_labels(SubgroupLattice &lattice);

/// Isomorphism type of a small group from its order and element orders:
/// Z1, Z2, Z3, Z4, D2 (Klein), D3, D4, A4, S4, or "L<order>" otherwise.
std::string small_group_name(std::span<const int> element_orders);

} // namespace eqdeg
