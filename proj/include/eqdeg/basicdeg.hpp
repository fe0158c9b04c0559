#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqdeg/burnside.hpp"
#include "eqdeg/reptheory.hpp"

namespace eqdeg {

struct BasicDegree {
  std::string rep;
  RingElement value;
  OrbitTypeSet orbit_types;
};

/// Degree of -Id on the unit ball of `rep` by the recurrence over orbit
/// types, with (-1)^{dim V^L} as the L-fixed degrees.
BasicDegree basic_degree(const RepHandle &rep, const LatticePtr &lattice);

/// Same recurrence run over every class of the lattice; classes that are
/// not orbit types must come out with coefficient 0.
RingElement basic_degree_all_classes(const RepHandle &rep, const LatticePtr &lattice);

/// Same recurrence with the cross terms computed by the orbit-counting
/// oracle instead of the lattice counts (small groups only).
RingElement basic_degree_oracle(const RepHandle &rep, const LatticePtr &lattice);

struct LeadingCoefficient {
  int cls = 0;
  std::int64_t coeff = 0;
  std::size_t weyl_order = 0;
  int fixed_dim = 0;
  bool ok = false;
};

/// For each maximal class of deg - (G): the coefficient must be -1 when
/// |W| = 2 and -2 when |W| = 1, and dim V^L must be odd.
std::vector<LeadingCoefficient> leading_coefficients_check(const BasicDegree &deg);

/// Product of deg_i^{m_i}; even powers collapse to the unit.
RingElement linear_map_degree(const LatticePtr &lattice,
                              const std::vector<std::pair<const BasicDegree *, int>> &factors);

} // namespace eqdeg
