#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "eqdeg/lattice.hpp"

namespace eqdeg {

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

/// Element of the Burnside ring A(G): integer combination of classes.
class RingElement {
public:
  RingElement() = default;
  explicit RingElement(LatticePtr lattice) : lattice_(std::move(lattice)) {}

  /// The generator (H).
  static RingElement generator(LatticePtr lattice, int h, std::int64_t coeff = 1);
  /// The unit (G).
  static RingElement unit(LatticePtr lattice);

  const LatticePtr &lattice() const { return lattice_; }
  const std::map<int, std::int64_t> &coeffs() const { return coeffs_; }
  std::int64_t coeff(int h) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_to(int h, std::int64_t c);

  friend RingElement operator+(const RingElement &a, const RingElement &b);
  friend RingElement operator-(const RingElement &a);
  friend RingElement operator-(const RingElement &a, const RingElement &b);
  friend RingElement operator*(std::int64_t s, const RingElement &a);
  friend bool operator==(const RingElement &a, const RingElement &b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// "(S4) - (D2) - 2(D3) + 3(D1) - (Z1)": order descending, then label.
  std::string to_string() const;

private:
  LatticePtr lattice_;
  std::map<int, std::int64_t> coeffs_;
};

/// Classes in print order: subgroup order descending, then label.
std::vector<int> print_order(const SubgroupLattice &lattice, std::vector<int> classes);

/// Product in A(G) by the recursive coefficient formula.
RingElement mul(const RingElement &a, const RingElement &b);

/// (H) * (K), memoised per lattice.
const RingElement &mul_generators(const LatticePtr &lattice, int h, int k);

/// Product computed by counting orbits on G/H x G/K (orders <= 200).
RingElement mul_oracle(const RingElement &a, const RingElement &b);

/// Maximal classes of the support.
std::vector<int> max_part(const RingElement &a);

/// a_L = (m_L - sum_{K > L} a_K n(L,K) |W(K)|) / |W(L)|, descending in L,
/// where m are marks |X^L|. Throws InternalError on inexact division.
std::map<int, std::int64_t> solve_marks(const SubgroupLattice &lattice,
                                        const std::vector<std::int64_t> &marks,
                                        const std::vector<bool> &active);

/// Marks |(G/H)^L| = n(L,H)|W(H)| summed against the coefficients of a.
std::vector<std::int64_t> marks(const RingElement &a);

/// Overflow-checked helpers.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

} // namespace eqdeg
