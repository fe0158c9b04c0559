#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eqdeg/group.hpp"

namespace eqdeg {

/// Fixed-width membership mask over the elements of one group.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  void insert(Elem e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  bool contains(Elem e) const { return words_[e >> 6] >> (e & 63) & 1; }

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool subset_of(const ElementSet &other) const;
  std::vector<Elem> elements() const;
  std::uint64_t hash() const;
  const std::vector<std::uint64_t> &words() const { return words_; }

  friend bool operator==(const ElementSet &, const ElementSet &) = default;

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Order on sorted membership lists of equal length: the set holding the
/// smallest element of the symmetric difference comes first.
bool lex_less(const ElementSet &a, const ElementSet &b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet &s) const { return std::size_t(s.hash()); }
};

/// A subgroup: membership mask plus its sorted element list.
class Subgroup {
public:
  Subgroup() = default;
  explicit Subgroup(ElementSet members)
      : members_(std::move(members)), elements_(members_.elements()) {}

  const ElementSet &members() const { return members_; }
  const std::vector<Elem> &elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Elem e) const { return members_.contains(e); }

  friend bool operator==(const Subgroup &a, const Subgroup &b) {
    return a.members_ == b.members_;
  }

private:
  ElementSet members_;
  std::vector<Elem> elements_;
};

Subgroup trivial_subgroup(const Group &g);
Subgroup whole_group(const Group &g);

/// Subgroup generated by `gens`.
Subgroup generate(const Group &g, std::span<const Elem> gens);

/// <h, x> where `h_gens` generates h (coset enumeration over h).
Subgroup extend(const Group &g, const Subgroup &h, std::span<const Elem> h_gens, Elem x);

/// Small generating set, chosen greedily in element order.
std::vector<Elem> generating_set(const Group &g, const Subgroup &h);

bool is_subgroup(const Group &g, const ElementSet &s);
bool is_normal_in(const Group &g, const Subgroup &n, const Subgroup &h);

/// x H x^-1
ElementSet conjugate(const Group &g, const Subgroup &h, Elem x);

/// {g : gHg^-1 = H}, by direct scan.
Subgroup normalizer(const Group &g, const Subgroup &h);

/// |N(H)| / |H|
std::size_t weyl_order(const Group &g, const Subgroup &h);

Subgroup intersect(const Subgroup &a, const Subgroup &b);

} // namespace eqdeg
