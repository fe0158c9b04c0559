#pragma once

#include <string>
#include <vector>

#include "eqdeg/lattice.hpp"

namespace eqdeg {

/// Goursat description of a subgroup of G1 x G2: normal subgroups h_o of h
/// and k_o of k together with an isomorphism h/h_o -> k/k_o.
struct GoursatDatum {
  Subgroup h, h_o;  ///< subgroups of G1
  Subgroup k, k_o;  ///< subgroups of G2
  /// theta[x] for x in h is an element of k representing the image of the
  /// coset x h_o. Indexed by elements of G1; entries outside h are unused.
  std::vector<Elem> theta;
};

/// {(x, y) : x in h, y in theta(x) k_o}
Subgroup reconstruct(const Group &product, const GoursatDatum &d);

/// Projections, kernels and isomorphism of a subgroup of a product group.
GoursatDatum decompose(const Group &product, const Subgroup &s);

/// Conjugacy of the subgroups described by two data, decided on the data:
/// there must be x in G1 and y in G2 carrying h, h_o onto b.h, b.h_o and
/// k, k_o onto b.k, b.k_o, intertwining the two isomorphisms.
bool are_conjugate_amalgamated(const Group &product, const GoursatDatum &a,
                               const GoursatDatum &b);

/// Every conjugacy class of subgroups of the product of the two lattices'
/// groups, from Goursat quadruples deduplicated by are_conjugate_amalgamated.
/// `product` must be the direct product of the two groups.
SubgroupLattice goursat_enumerate(GroupPtr product, const SubgroupLattice &first,
                                  const SubgroupLattice &second);

struct AmalgamatedName {
  std::string h, h_o, l, k_o, k;
  int disambiguator = 0;
  bool auto_label = false;  ///< some part came from an auto-generated factor label

  /// Label without the disambiguator, e.g. "D4p^{Z2-} x_{D4} D4".
  std::string label() const;
};

/// Name parts of a subgroup of the product; the disambiguator is read off
/// the labelled product lattice (0 if the lattice is not labelled yet).
AmalgamatedName name_amalgamated(const SubgroupLattice &product, const Subgroup &s,
                                 const SubgroupLattice &first, const SubgroupLattice &second);

/// Label every class of a product lattice from the factor labels, adding
/// disambiguators in lattice order where labels collide.
void label_product(SubgroupLattice &product, const SubgroupLattice &first,
                   const SubgroupLattice &second);

} // namespace eqdeg
