#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eqdeg/lattice.hpp"

namespace eqdeg {

/// Conjugacy classes of elements.
struct ElementClasses {
  std::vector<int> class_of;             ///< per element
  std::vector<std::vector<Elem>> members;
};

ElementClasses element_classes(const Group &g);

/// Integer-valued class function, stored per element.
struct Character {
  GroupPtr group;
  std::string name;
  std::vector<long> values;

  long dim() const { return values.at(0); }
  long operator()(Elem g) const { return values[g]; }
};

/// (1/|G|) sum a(g) b(g); throws InternalError if not an integer.
long inner_product(const Character &a, const Character &b);

/// Integer matrix representation: matrices[g] is row-major dim x dim.
struct RepHandle {
  GroupPtr group;
  std::string name;
  int dim = 0;
  std::vector<std::vector<long>> matrices;

  Character character() const;
  /// Image of v under g.
  std::vector<long> apply(Elem g, const std::vector<long> &v) const;
};

/// Irreducible characters W0..W4 of S4 (group from build_group("S4")).
std::vector<Character> character_table_s4(GroupPtr s4);

/// Class representatives (1), (12), (12)(34), (123), (1234) of S4.
std::vector<Elem> s4_class_representatives(const Group &s4);

/// Irreducible characters of S4p: W_i with the sign of Z2 acting trivially
/// (name "Wi") or by -1 (name "Wi-").
std::vector<Character> character_table_s4p(GroupPtr s4p);

/// Multiplicities of the irreducibles in chi; non-integral -> DomainError.
std::map<std::string, long> decompose(const Character &chi, const std::vector<Character> &irreducibles);

/// Named matrix models.
///  S4:  W0, W1, W2, W3, W4, R4 (permutation representation on R^4)
///  S4p: W0, W3m (signed permutation matrices)
RepHandle make_rep(GroupPtr g, std::string_view name);

/// Kronecker product over the product group; `product` must be rep1's group
/// times rep2's group.
RepHandle tensor(GroupPtr product, const RepHandle &a, const RepHandle &b);

/// dim V^H = (1/|H|) sum chi(h).
int fixed_dim(const Character &chi, const Subgroup &h);

struct OrbitTypeSet {
  std::vector<int> classes;  ///< ascending class indices
  std::map<int, int> fixed_dims;
};

/// Orbit types of a representation. (H) is one iff dim V^K < dim V^H for
/// every minimal class (K) > (H); each hit is confirmed on a random vector.
OrbitTypeSet orbit_types(const RepHandle &rep, const SubgroupLattice &lattice);

/// Fixed-point dimension of every class of the lattice.
std::vector<int> fixed_dims(const Character &chi, const SubgroupLattice &lattice);

/// {g : g v = v for all v in V^H}; H is an orbit type iff this equals H.
Subgroup fixed_space_stabilizer(const RepHandle &rep, const Subgroup &h);

/// Integer basis of V^H (independent columns of the averaging sum).
std::vector<std::vector<long>> fixed_basis(const RepHandle &rep, const Subgroup &h);

/// Stabilizer of one vector.
Subgroup stabilizer(const RepHandle &rep, const std::vector<long> &v);

/// Random integer combination of fixed_basis(h) whose stabilizer is exactly
/// h. Returns false if `attempts` samples all have larger stabilizers.
bool random_stabilizer_check(const RepHandle &rep, const Subgroup &h, std::uint64_t seed,
                             int attempts = 3);

/// Maximal orbit types of a tensor product predicted from maximal orbit
/// types K of rep1 and H of rep2 with one-dimensional fixed spaces: the
/// class of {(a, b) in N(K) x N(H) : a and b act by the same sign on the
/// fixed lines}.
int maximal_tensor_type(const RepHandle &rep1, const SubgroupLattice &lat1, int k,
                        const RepHandle &rep2, const SubgroupLattice &lat2, int h,
                        const SubgroupLattice &product);

} // namespace eqdeg
