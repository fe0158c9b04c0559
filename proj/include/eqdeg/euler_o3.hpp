#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqdeg/burnside.hpp"

namespace eqdeg {

/// One row of the restriction table: a class of O(3) or O(3) x S4 and its
/// image classes in the finite subgroup.
struct PsiEntry {
  std::string group;
  std::string label;
  int weyl_dim = 0;
  std::vector<std::string> images;
  bool remainder = false;
  std::string note;
};

/// A degree over O(3) or O(3) x S4 as shipped in the table data.
struct PublishedDegree {
  std::string name;
  std::string group;
  std::string finite_rep;
  std::vector<std::pair<std::string, std::int64_t>> coefficients;
  bool remainder = false;
};

/// Raw JSON text of the table.
const std::string &psi_table_text();
const std::vector<PsiEntry> &psi_table();
const std::vector<PublishedDegree> &published_degrees();
const PsiEntry *find_psi(std::string_view group, std::string_view label);

/// Label of the whole group ("O(3)" or "O(3) x S4").
std::string unit_label(std::string_view group);
/// Finite subgroup descriptor the table restricts to ("S4p", "S4pxS4").
std::string finite_group_of(std::string_view group);

/// Integer combination of named classes of O(3) or O(3) x S4, plus an
/// optional unresolved part on submaximal classes.
class TruncatedEulerElement {
public:
  TruncatedEulerElement() = default;
  explicit TruncatedEulerElement(std::string group) : group_(std::move(group)) {}
  static TruncatedEulerElement unit(std::string group);

  const std::string &group() const { return group_; }
  /// Terms in print order.
  const std::vector<std::pair<std::string, std::int64_t>> &terms() const { return terms_; }
  bool remainder() const { return remainder_; }
  void set_remainder(bool r) { remainder_ = r; }
  bool is_zero() const { return terms_.empty() && !remainder_; }

  /// Known coefficient; for a class with no stored term this is 0 only when
  /// there is no remainder, otherwise UnsupportedClassError.
  std::int64_t coeff(std::string_view label) const;
  void add_to(const std::string &label, std::int64_t c);

  friend TruncatedEulerElement operator-(const TruncatedEulerElement &a,
                                         const TruncatedEulerElement &b);

  std::string to_string() const;

private:
  std::string group_;
  std::vector<std::pair<std::string, std::int64_t>> terms_;
  bool remainder_ = false;
};

/// Partial order on the classes the library knows: the unit is above
/// everything, lifted classes "O(3) x H" follow the S4 lattice, tabled
/// non-unit classes are pairwise incomparable. Anything else throws.
bool o3_leq(std::string_view a, std::string_view b, const SubgroupLattice *s4);

std::vector<std::string> max_part(const TruncatedEulerElement &e, const SubgroupLattice *s4);

struct FiniteImage {
  RingElement value;
  bool remainder = false;
};

/// Table-driven restriction to the finite subgroup; classes outside the
/// table raise UnsupportedClassError.
FiniteImage psi_restrict(const TruncatedEulerElement &e, const LatticePtr &target);

/// Element of A(S4) lifted to O(3) x S4, where O(3) acts trivially: each
/// (H) becomes (O(3) x H).
TruncatedEulerElement lift_s4(const RingElement &a);

/// The published degree `name` ("V1" or "V1xW4"), checked against the
/// finite degree computed over the corresponding finite subgroup: the
/// restriction of every listed class must reproduce the finite
/// coefficients at its images, and the images of the non-unit classes must
/// be exactly the maximal classes of finite - unit. Throws InternalError on
/// disagreement.
TruncatedEulerElement assemble_published(std::string_view name, const RingElement &finite);

inline TruncatedEulerElement assemble_deg_V1_W4(const RingElement &finite)
{
  return assemble_published("V1xW4", finite);
}

/// Maximal classes of b, which keep nonzero coefficients in a * b when a is
/// invertible. Throws DomainError when a is not certified invertible.
std::vector<std::string> max_coeff_survival(bool a_is_unit, const TruncatedEulerElement &b,
                                            const SubgroupLattice *s4 = nullptr);

} // namespace eqdeg
