#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eqdeg/group.hpp"
#include "eqdeg/subgroup.hpp"

namespace eqdeg {

/// Conjugacy class of subgroups.
struct SubgroupClass {
  Subgroup rep;                  ///< lexicographically minimal conjugate
  std::vector<Elem> generators;  ///< generators of `rep`
  std::string label;
  bool auto_label = true;        ///< label was generated, not taken from a dictionary
  int disambiguator = 0;         ///< 0 when the label is unique
  std::size_t class_size = 0;
  Subgroup normalizer;
  std::size_t weyl_order = 0;
  std::vector<ElementSet> conjugates;

  std::size_t order() const { return rep.order(); }
  /// Label with the disambiguator appended as "_k".
  std::string name() const;
  /// Bracketed display, e.g. "(D4z)" or "(D4p^{Z2-} x_{D4} D4)_1".
  std::string display() const;
};

struct LatticeOptions {
  std::size_t order_cap = 2000;
};

/// All conjugacy classes of subgroups of a finite group, sorted by subgroup
/// order and then by canonical representative. Index 0 is the trivial
/// subgroup and the last index is the whole group.
class SubgroupLattice {
public:
  /// Direct enumeration: cyclic seeds closed under "extend by one element".
  static SubgroupLattice enumerate(GroupPtr group, const LatticeOptions &options = {});

  /// Build from one subgroup per conjugacy class (any conjugate).
  static SubgroupLattice from_representatives(GroupPtr group, std::vector<Subgroup> reps);

  const Group &group() const { return *group_; }
  const GroupPtr &group_ptr() const { return group_; }

  std::size_t size() const { return classes_.size(); }
  const SubgroupClass &operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<SubgroupClass> &classes() const { return classes_; }
  int top() const { return int(classes_.size()) - 1; }

  /// (K) <= (H): some conjugate of K lies in H.
  bool leq(int k, int h) const { return n_count(k, h) > 0; }
  /// Number of conjugates of H containing the representative of L.
  std::uint32_t n_count(int l, int h) const { return n_counts_[std::size_t(l) * size() + std::size_t(h)]; }

  /// Class of an arbitrary subgroup, or -1 if `s` is not a subgroup.
  int class_of(const ElementSet &s) const;

  /// Index of the class with the given name(), or -1.
  int find(std::string_view name) const;
  /// As find(), but throws ConfigError when missing.
  int require(std::string_view name) const;

  /// Maximal elements of `subset` with respect to leq.
  std::vector<int> maximal(std::span<const int> subset) const;

  void set_label(int i, std::string label, bool auto_label, int disambiguator = 0);

  void save(std::ostream &out, std::string_view code_version) const;
  /// Empty if the stream is not a cache for this group and version.
  static std::optional<SubgroupLattice> load(GroupPtr group, std::istream &in,
                                             std::string_view code_version);

private:
  explicit SubgroupLattice(GroupPtr group) : group_(std::move(group)) {}
  void finalize(std::vector<Subgroup> reps, std::vector<std::vector<Elem>> gens);
  void compute_n_counts();
  void assign_auto_labels();

  GroupPtr group_;
  std::vector<SubgroupClass> classes_;
  std::unordered_multimap<std::uint64_t, std::pair<int, int>> lookup_;
  std::vector<std::uint32_t> n_counts_;
};

/// Operations named after the quantities they compute.
inline SubgroupLattice enumerate_subgroups(GroupPtr group, const LatticeOptions &options = {})
{
  return SubgroupLattice::enumerate(std::move(group), options);
}

inline std::uint32_t n_count(const SubgroupLattice &lattice, int l, int h)
{
  return lattice.n_count(l, h);
}

/// Partial order matrix: result[k * size + h] is true iff (K) <= (H).
std::vector<bool> class_order(const SubgroupLattice &lattice);

} // namespace eqdeg
