#include "eqdeg/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "eqdeg/error.hpp"

namespace eqdeg {

Permutation compose(const Permutation &p, const Permutation &q)
{
  Permutation r;
  r.images.resize(q.images.size());
  for (std::size_t i = 0; i < q.images.size(); ++i)
    r.images[i] = p.images[q.images[i]];
  return r;
}

Permutation parse_cycles(std::string_view cycles, std::size_t degree)
{
  Permutation p;
  p.images.resize(degree);
  std::iota(p.images.begin(), p.images.end(), std::uint8_t{0});
  std::vector<std::uint8_t> cycle;
  bool open = false;
  auto bad = [&] { return ConfigError("bad cycle notation: " + std::string(cycles)); };
  for (char c : cycles) {
    if (c == '(') {
      if (open)
        throw bad();
      open = true;
      cycle.clear();
    } else if (c == ')') {
      if (!open)
        throw bad();
      open = false;
      for (std::size_t i = 0; i < cycle.size(); ++i)
        p.images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    } else if (c >= '1' && c <= '9') {
      if (!open)
        throw bad();
      std::size_t point = std::size_t(c - '1');
      if (point >= degree)
        throw ConfigError("cycle point out of range in " + std::string(cycles));
      cycle.push_back(std::uint8_t(point));
    } else if (c != ' ' && c != ',') {
      throw bad();
    }
  }
  if (open)
    throw bad();
  return p;
}

Matrix3 multiply(const Matrix3 &a, const Matrix3 &b)
{
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k)
        s += a[3 * i + k] * b[3 * k + j];
      r[3 * i + j] = s;
    }
  return r;
}

int determinant(const Matrix3 &m)
{
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

ElementTag multiply_tags(const ElementTag &a, const ElementTag &b)
{
  if (a.index() != b.index())
    throw InternalError("multiplying element tags of different kinds");
  if (auto *pa = std::get_if<Permutation>(&a))
    return compose(*pa, std::get<Permutation>(b));
  if (auto *sa = std::get_if<Sign>(&a))
    return Sign{sa->value * std::get<Sign>(b).value};
  if (auto *ma = std::get_if<Matrix3>(&a))
    return multiply(*ma, std::get<Matrix3>(b));
  throw InternalError("product tags need their group to be multiplied");
}

namespace {

ElementTag identity_like(const ElementTag &t)
{
  if (auto *p = std::get_if<Permutation>(&t)) {
    Permutation id;
    id.images.resize(p->images.size());
    std::iota(id.images.begin(), id.images.end(), std::uint8_t{0});
    return id;
  }
  if (std::holds_alternative<Sign>(t))
    return Sign{1};
  if (std::holds_alternative<Matrix3>(t))
    return Matrix3{1, 0, 0, 0, 1, 0, 0, 0, 1};
  return ProductTag{0, 0};
}

std::vector<ElementTag> close_under_products(std::vector<ElementTag> gens)
{
  if (gens.empty())
    throw ConfigError("empty generator list");
  std::set<ElementTag> seen;
  std::vector<ElementTag> elems;
  ElementTag id = identity_like(gens.front());
  seen.insert(id);
  elems.push_back(id);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto &g : gens) {
      ElementTag x = multiply_tags(elems[i], g);
      if (seen.insert(x).second)
        elems.push_back(std::move(x));
    }
  }
  return elems;
}

const std::array<std::array<int, 3>, 4> &body_diagonals()
{
  static const std::array<std::array<int, 3>, 4> d{
      {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  return d;
}

std::vector<Matrix3> signed_permutation_matrices()
{
  std::vector<Matrix3> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int signs = 0; signs < 8; ++signs) {
      Matrix3 m{};
      for (int row = 0; row < 3; ++row)
        m[3 * row + perm[row]] = (signs >> row & 1) ? -1 : 1;
      out.push_back(m);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

GroupPtr symmetric_group(std::size_t n, bool even_only, std::string name)
{
  std::vector<ElementTag> elems;
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  do {
    if (even_only) {
      int inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          inversions += img[i] > img[j];
      if (inversions % 2)
        continue;
    }
    elems.push_back(Permutation{img});
  } while (std::next_permutation(img.begin(), img.end()));
  return std::make_shared<const Group>(Group::from_elements(std::move(name), std::move(elems)));
}

GroupPtr base_group(std::string_view d)
{
  std::string name(d);
  auto number = [&](std::string_view digits) -> int {
    int v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || v <= 0)
      throw ConfigError("unknown group descriptor: " + name);
    return v;
  };

  if (d == "S4p") {
    std::vector<ElementTag> elems;
    for (const auto &m : signed_permutation_matrices())
      elems.emplace_back(m);
    return std::make_shared<const Group>(Group::from_elements(name, std::move(elems)));
  }
  if (d == "A4")
    return symmetric_group(4, true, name);
  if (d == "V4") {
    std::vector<Permutation> gens{parse_cycles("(12)(34)", 4), parse_cycles("(13)(24)", 4)};
    return permutation_group(name, gens);
  }
  if (d == "Z2") {
    std::vector<ElementTag> elems{Sign{1}, Sign{-1}};
    return std::make_shared<const Group>(Group::from_elements(name, std::move(elems)));
  }
  if (d.size() >= 2 && d[0] == 'S') {
    int n = number(d.substr(1));
    if (n > 5)
      throw ConfigError("symmetric groups are supported up to S5: " + name);
    return symmetric_group(std::size_t(n), false, name);
  }
  if (d.size() >= 2 && d[0] == 'Z') {
    int n = number(d.substr(1));
    if (n > 12)
      throw ConfigError("cyclic groups are supported up to Z12: " + name);
    Permutation c;
    c.images.resize(std::size_t(n));
    for (int i = 0; i < n; ++i)
      c.images[std::size_t(i)] = std::uint8_t((i + 1) % n);
    std::vector<Permutation> gens{c};
    return permutation_group(name, gens);
  }
  if (d.size() >= 2 && d[0] == 'D') {
    int n = number(d.substr(1));
    if (n < 3 || n > 12)
      throw ConfigError("dihedral groups are supported for 3 <= n <= 12: " + name);
    Permutation rot, ref;
    rot.images.resize(std::size_t(n));
    ref.images.resize(std::size_t(n));
    for (int i = 0; i < n; ++i) {
      rot.images[std::size_t(i)] = std::uint8_t((i + 1) % n);
      ref.images[std::size_t(i)] = std::uint8_t((n - i) % n);
    }
    std::vector<Permutation> gens{rot, ref};
    return permutation_group(name, gens);
  }
  throw ConfigError("unknown group descriptor: " + name);
}

} // namespace

Group Group::from_elements(std::string name, std::vector<ElementTag> elements)
{
  if (elements.empty())
    throw ConfigError("group " + name + " has no elements");
  if (elements.size() > 65535)
    throw SizeError("group " + name + " is too large");

  ElementTag id = identity_like(elements.front());
  auto it = std::find(elements.begin(), elements.end(), id);
  if (it == elements.end())
    throw InternalError("group " + name + " lacks an identity");
  std::iter_swap(elements.begin(), it);

  std::map<ElementTag, Elem> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i], Elem(i)).second)
      throw InternalError("duplicate element in group " + name);

  Group g;
  g.name_ = std::move(name);
  g.order_ = elements.size();
  g.table_.resize(g.order_ * g.order_);
  for (std::size_t a = 0; a < g.order_; ++a)
    for (std::size_t b = 0; b < g.order_; ++b) {
      auto found = index.find(multiply_tags(elements[a], elements[b]));
      if (found == index.end())
        throw InternalError("element list of " + g.name_ + " is not closed");
      g.table_[a * g.order_ + b] = found->second;
    }
  g.tags_ = std::move(elements);
  g.finish();
  return g;
}

Group Group::direct_product(std::shared_ptr<const Group> first,
                            std::shared_ptr<const Group> second)
{
  Group g;
  g.name_ = first->name() + "x" + second->name();
  std::size_t n1 = first->order(), n2 = second->order();
  g.order_ = n1 * n2;
  if (g.order_ > 65535)
    throw SizeError("group " + g.name_ + " is too large");
  g.table_.resize(g.order_ * g.order_);
  g.tags_.reserve(g.order_);
  for (std::size_t a = 0; a < g.order_; ++a)
    g.tags_.emplace_back(ProductTag{Elem(a / n2), Elem(a % n2)});
  for (std::size_t a = 0; a < g.order_; ++a)
    for (std::size_t b = 0; b < g.order_; ++b) {
      Elem x = first->mul(Elem(a / n2), Elem(b / n2));
      Elem y = second->mul(Elem(a % n2), Elem(b % n2));
      g.table_[a * g.order_ + b] = Elem(std::size_t(x) * n2 + y);
    }
  g.first_ = std::move(first);
  g.second_ = std::move(second);
  g.finish();
  return g;
}

void Group::finish()
{
  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order_; ++b)
      if (table_[a * order_ + b] == 0) {
        inverse_[a] = Elem(b);
        found = true;
        break;
      }
    if (!found)
      throw InternalError("element without inverse in " + name_);
  }
  element_order_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    int k = 1;
    Elem x = Elem(a);
    while (x != 0) {
      x = mul(x, Elem(a));
      ++k;
    }
    element_order_[a] = k;
  }
}

int Group::find(const ElementTag &tag) const
{
  if (auto *p = std::get_if<ProductTag>(&tag))
    return is_product() ? int(pair(p->first, p->second)) : -1;
  auto it = std::find(tags_.begin(), tags_.end(), tag);
  return it == tags_.end() ? -1 : int(it - tags_.begin());
}

GroupPtr permutation_group(std::string name, std::span<const Permutation> generators)
{
  std::vector<ElementTag> gens(generators.begin(), generators.end());
  return std::make_shared<const Group>(
      Group::from_elements(std::move(name), close_under_products(std::move(gens))));
}

GroupPtr build_group(std::string_view descriptor)
{
  if (descriptor.empty())
    throw ConfigError("empty group descriptor");
  // Left-associative products: "AxBxC" = (A x B) x C.
  auto pos = descriptor.rfind('x');
  if (pos == std::string_view::npos)
    return base_group(descriptor);
  if (pos == 0 || pos + 1 == descriptor.size())
    throw ConfigError("malformed product descriptor: " + std::string(descriptor));
  auto first = build_group(descriptor.substr(0, pos));
  auto second = base_group(descriptor.substr(pos + 1));
  return std::make_shared<const Group>(Group::direct_product(first, second));
}

std::pair<Permutation, int> octahedral_decompose(const Matrix3 &m)
{
  int sign = determinant(m);
  Matrix3 r = m;
  for (int &x : r)
    x *= sign;
  const auto &diag = body_diagonals();
  Permutation p;
  p.images.resize(4);
  for (std::size_t i = 0; i < 4; ++i) {
    std::array<int, 3> v{};
    for (int row = 0; row < 3; ++row)
      v[std::size_t(row)] = r[3 * row] * diag[i][0] + r[3 * row + 1] * diag[i][1] +
                            r[3 * row + 2] * diag[i][2];
    bool matched = false;
    for (std::size_t j = 0; j < 4; ++j) {
      bool plus = v == diag[j];
      bool minus = v[0] == -diag[j][0] && v[1] == -diag[j][1] && v[2] == -diag[j][2];
      if (plus || minus) {
        p.images[i] = std::uint8_t(j);
        matched = true;
      }
    }
    if (!matched)
      throw InternalError("matrix is not an octahedral symmetry");
  }
  return {p, sign};
}

Matrix3 octahedral_rotation(const Permutation &p)
{
  for (const auto &m : signed_permutation_matrices()) {
    if (determinant(m) != 1)
      continue;
    if (octahedral_decompose(m).first == p)
      return m;
  }
  throw InternalError("permutation has no octahedral rotation");
}

} // namespace eqdeg
