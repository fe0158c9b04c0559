#include "eqdeg/subgroup.hpp"

#include <algorithm>
#include <bit>

#include "eqdeg/error.hpp"

namespace eqdeg {

std::size_t ElementSet::size() const
{
  std::size_t n = 0;
  for (auto w : words_)
    n += std::size_t(std::popcount(w));
  return n;
}

bool ElementSet::subset_of(const ElementSet &other) const
{
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i])
      return false;
  return true;
}

std::vector<Elem> ElementSet::elements() const
{
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      int bit = std::countr_zero(w);
      out.push_back(Elem(i * 64 + std::size_t(bit)));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t ElementSet::hash() const
{
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return h;
}

bool lex_less(const ElementSet &a, const ElementSet &b)
{
  for (std::size_t i = 0; i < a.words().size(); ++i) {
    auto diff = a.words()[i] ^ b.words()[i];
    if (diff) {
      auto lowest = diff & (~diff + 1);
      return (a.words()[i] & lowest) != 0;
    }
  }
  return false;
}

Subgroup trivial_subgroup(const Group &g)
{
  ElementSet s(g.order());
  s.insert(0);
  return Subgroup(std::move(s));
}

Subgroup whole_group(const Group &g)
{
  ElementSet s(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    s.insert(Elem(i));
  return Subgroup(std::move(s));
}

Subgroup extend(const Group &g, const Subgroup &h, std::span<const Elem> h_gens, Elem x)
{
  if (h.contains(x))
    return h;
  std::vector<Elem> gens(h_gens.begin(), h_gens.end());
  gens.push_back(x);

  ElementSet mask = h.members();
  const auto &base = h.elements();
  std::vector<Elem> reps{0};
  auto add_coset = [&](Elem r) {
    reps.push_back(r);
    for (Elem e : base)
      mask.insert(g.mul(e, r));
  };
  add_coset(x);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (Elem s : gens) {
      Elem t = g.mul(reps[i], s);
      if (!mask.contains(t))
        add_coset(t);
    }
  return Subgroup(std::move(mask));
}

Subgroup generate(const Group &g, std::span<const Elem> gens)
{
  Subgroup h = trivial_subgroup(g);
  std::vector<Elem> used;
  for (Elem x : gens) {
    if (h.contains(x))
      continue;
    h = extend(g, h, used, x);
    used.push_back(x);
  }
  return h;
}

std::vector<Elem> generating_set(const Group &g, const Subgroup &h)
{
  // Prefer elements of large order so that few generators are needed.
  std::vector<Elem> candidates = h.elements();
  std::stable_sort(candidates.begin(), candidates.end(), [&](Elem a, Elem b) {
    return g.element_order(a) > g.element_order(b);
  });
  Subgroup cur = trivial_subgroup(g);
  std::vector<Elem> gens;
  for (Elem x : candidates) {
    if (cur.order() == h.order())
      break;
    if (cur.contains(x))
      continue;
    cur = extend(g, cur, gens, x);
    gens.push_back(x);
  }
  return gens;
}

bool is_subgroup(const Group &g, const ElementSet &s)
{
  if (!s.contains(0))
    return false;
  auto elems = s.elements();
  for (Elem a : elems) {
    if (!s.contains(g.inv(a)))
      return false;
    for (Elem b : elems)
      if (!s.contains(g.mul(a, b)))
        return false;
  }
  return true;
}

bool is_normal_in(const Group &g, const Subgroup &n, const Subgroup &h)
{
  if (!n.members().subset_of(h.members()))
    return false;
  auto gens = generating_set(g, h);
  for (Elem x : gens)
    for (Elem e : n.elements())
      if (!n.contains(g.conj(x, e)))
        return false;
  return true;
}

ElementSet conjugate(const Group &g, const Subgroup &h, Elem x)
{
  ElementSet out(g.order());
  for (Elem e : h.elements())
    out.insert(g.conj(x, e));
  return out;
}

Subgroup normalizer(const Group &g, const Subgroup &h)
{
  auto gens = generating_set(g, h);
  ElementSet out(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    bool normalizes = true;
    for (Elem s : gens)
      if (!h.contains(g.conj(Elem(i), s))) {
        normalizes = false;
        break;
      }
    if (normalizes)
      out.insert(Elem(i));
  }
  return Subgroup(std::move(out));
}

std::size_t weyl_order(const Group &g, const Subgroup &h)
{
  return normalizer(g, h).order() / h.order();
}

Subgroup intersect(const Subgroup &a, const Subgroup &b)
{
  ElementSet out(a.members().universe());
  for (Elem e : a.elements())
    if (b.contains(e))
      out.insert(e);
  return Subgroup(std::move(out));
}

} // namespace eqdeg
