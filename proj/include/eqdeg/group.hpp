#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace eqdeg {

/// Index of a group element in its Cayley table. The identity is always 0.
using Elem = std::uint16_t;

/// Permutation of {0, ..., n-1}; images[i] is the image of i.
struct Permutation {
  std::vector<std::uint8_t> images;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;
};

/// Composition p*q acts as p(q(i)).
Permutation compose(const Permutation &p, const Permutation &q);

/// Parse cycle notation with 1-based points, e.g. "(12)(34)" or "(1324)".
Permutation parse_cycles(std::string_view cycles, std::size_t degree);

/// Row-major 3x3 integer matrix.
using Matrix3 = std::array<int, 9>;

Matrix3 multiply(const Matrix3 &a, const Matrix3 &b);
int determinant(const Matrix3 &m);

/// Element of Z2 written multiplicatively (+1 or -1).
struct Sign {
  int value = 1;
  friend bool operator==(const Sign &, const Sign &) = default;
  friend auto operator<=>(const Sign &, const Sign &) = default;
};

/// Element of a direct product, stored as element indices in the two factors.
struct ProductTag {
  Elem first = 0;
  Elem second = 0;
  friend bool operator==(const ProductTag &, const ProductTag &) = default;
  friend auto operator<=>(const ProductTag &, const ProductTag &) = default;
};

/// Concrete realisation of a group element.
using ElementTag = std::variant<Permutation, Sign, Matrix3, ProductTag>;

/// Finite group given by its full multiplication table, together with a
/// concrete realisation of every element.
class Group {
public:
  /// Build from an explicit element list closed under `mul`. The identity
  /// must be present; it is moved to index 0.
  static Group from_elements(std::string name, std::vector<ElementTag> elements);

  /// Direct product; element (a, b) gets index a * |second| + b.
  static Group direct_product(std::shared_ptr<const Group> first,
                              std::shared_ptr<const Group> second);

  const std::string &name() const { return name_; }
  std::size_t order() const { return order_; }

  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inverse_[g]); }
  int element_order(Elem a) const { return element_order_[a]; }

  const ElementTag &tag(Elem a) const { return tags_[a]; }

  bool is_product() const { return first_ != nullptr; }
  const std::shared_ptr<const Group> &first_factor() const { return first_; }
  const std::shared_ptr<const Group> &second_factor() const { return second_; }
  Elem pair(Elem a, Elem b) const {
    return Elem(std::size_t(a) * second_->order() + b);
  }
  std::pair<Elem, Elem> split(Elem g) const {
    return {Elem(g / second_->order()), Elem(g % second_->order())};
  }

  /// Element index of a tag, or -1.
  int find(const ElementTag &tag) const;

private:
  Group() = default;
  void finish();

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<int> element_order_;
  std::vector<ElementTag> tags_;
  std::shared_ptr<const Group> first_;
  std::shared_ptr<const Group> second_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Multiply two tags of the same kind. Product tags need the owning group.
ElementTag multiply_tags(const ElementTag &a, const ElementTag &b);

/// Build a group from a descriptor: S4, S4p, Z2, Z<n>, D<n>, A4, S<n> (n<=5),
/// V4, and direct products written "AxB" (e.g. "S4pxS4", "Z2xZ2", "D4xZ2").
/// Throws ConfigError for unknown descriptors.
GroupPtr build_group(std::string_view descriptor);

/// Permutation group generated by the given permutations.
GroupPtr permutation_group(std::string name, std::span<const Permutation> generators);

/// For an element of S4p (signed permutation matrix) return the permutation
/// of the four body diagonals it induces and the central sign, so that the
/// matrix equals sign * rotation(perm).
std::pair<Permutation, int> octahedral_decompose(const Matrix3 &m);

/// Rotation matrix realising a permutation of the four body diagonals.
Matrix3 octahedral_rotation(const Permutation &p);

} // namespace eqdeg
