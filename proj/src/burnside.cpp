#include "eqdeg/burnside.hpp"

#include <algorithm>
#include <unordered_map>

#include "eqdeg/error.hpp"

namespace eqdeg {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw InternalError("integer overflow in Burnside ring arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw InternalError("integer overflow in Burnside ring arithmetic");
  return r;
}

RingElement RingElement::generator(LatticePtr lattice, int h, std::int64_t coeff)
{
  RingElement r(std::move(lattice));
  r.add_to(h, coeff);
  return r;
}

RingElement RingElement::unit(LatticePtr lattice)
{
  int top = lattice->top();
  return generator(std::move(lattice), top);
}

std::int64_t RingElement::coeff(int h) const
{
  auto it = coeffs_.find(h);
  return it == coeffs_.end() ? 0 : it->second;
}

void RingElement::add_to(int h, std::int64_t c)
{
  if (c == 0)
    return;
  if (h < 0 || !lattice_ || std::size_t(h) >= lattice_->size())
    throw ConfigError("class index out of range");
  auto &slot = coeffs_[h];
  slot = checked_add(slot, c);
  if (slot == 0)
    coeffs_.erase(h);
}

namespace {

const LatticePtr &common(const RingElement &a, const RingElement &b)
{
  if (a.lattice() && b.lattice() && a.lattice() != b.lattice())
    throw ConfigError("ring elements over different groups");
  return a.lattice() ? a.lattice() : b.lattice();
}

} // namespace

RingElement operator+(const RingElement &a, const RingElement &b)
{
  RingElement r(common(a, b));
  r.coeffs_ = a.coeffs_;
  for (auto [h, c] : b.coeffs_)
    r.add_to(h, c);
  return r;
}

RingElement operator-(const RingElement &a)
{
  return -1 * a;
}

RingElement operator-(const RingElement &a, const RingElement &b)
{
  return a + (-b);
}

RingElement operator*(std::int64_t s, const RingElement &a)
{
  RingElement r(a.lattice_);
  for (auto [h, c] : a.coeffs_)
    r.add_to(h, checked_mul(s, c));
  return r;
}

std::vector<int> print_order(const SubgroupLattice &lattice, std::vector<int> classes)
{
  std::sort(classes.begin(), classes.end(), [&](int a, int b) {
    const auto &ca = lattice[std::size_t(a)];
    const auto &cb = lattice[std::size_t(b)];
    if (ca.order() != cb.order())
      return ca.order() > cb.order();
    return ca.name() < cb.name();
  });
  return classes;
}

std::string RingElement::to_string() const
{
  if (coeffs_.empty())
    return "0";
  std::vector<int> classes;
  for (auto [h, c] : coeffs_)
    classes.push_back(h);
  std::string out;
  for (int h : print_order(*lattice_, classes)) {
    std::int64_t c = coeffs_.at(h);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::int64_t m = c < 0 ? -c : c;
    if (m != 1)
      out += std::to_string(m);
    out += (*lattice_)[std::size_t(h)].display();
  }
  return out;
}

std::vector<std::int64_t> marks(const RingElement &a)
{
  const auto &lat = *a.lattice();
  std::vector<std::int64_t> out(lat.size(), 0);
  for (auto [h, c] : a.coeffs()) {
    std::int64_t w = std::int64_t(lat[std::size_t(h)].weyl_order);
    for (int l = 0; l <= h; ++l)
      if (auto n = lat.n_count(l, h))
        out[std::size_t(l)] = checked_add(out[std::size_t(l)], checked_mul(c, checked_mul(n, w)));
  }
  return out;
}

std::map<int, std::int64_t> solve_marks(const SubgroupLattice &lattice,
                                        const std::vector<std::int64_t> &marks,
                                        const std::vector<bool> &active)
{
  int n = int(lattice.size());
  std::vector<std::int64_t> coeff(std::size_t(n), 0);
  std::vector<int> support;
  for (int l = n - 1; l >= 0; --l) {
    if (!active[std::size_t(l)])
      continue;
    std::int64_t rest = marks[std::size_t(l)];
    for (int k : support)
      if (auto nk = lattice.n_count(l, k))
        rest = checked_add(rest, -checked_mul(checked_mul(coeff[std::size_t(k)], nk),
                                              std::int64_t(lattice[std::size_t(k)].weyl_order)));
    std::int64_t w = std::int64_t(lattice[std::size_t(l)].weyl_order);
    if (rest % w != 0)
      throw InternalError("inexact division at class " + lattice[std::size_t(l)].name());
    coeff[std::size_t(l)] = rest / w;
    if (coeff[std::size_t(l)] != 0)
      support.push_back(l);
  }
  std::map<int, std::int64_t> out;
  for (int l : support)
    out[l] = coeff[std::size_t(l)];
  return out;
}

RingElement mul(const RingElement &a, const RingElement &b)
{
  const LatticePtr &lat = common(a, b);
  RingElement r(lat);
  if (a.is_zero() || b.is_zero())
    return r;
  auto ma = marks(a);
  auto mb = marks(b);
  std::vector<std::int64_t> m(ma.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = checked_mul(ma[i], mb[i]);
  for (auto [h, c] : solve_marks(*lat, m, std::vector<bool>(m.size(), true)))
    r.add_to(h, c);
  return r;
}

const RingElement &mul_generators(const LatticePtr &lattice, int h, int k)
{
  static std::mutex mutex;
  static std::map<const SubgroupLattice *,
                  std::pair<std::weak_ptr<const SubgroupLattice>, std::map<std::pair<int, int>, RingElement>>>
      memo;
  if (h > k)
    std::swap(h, k);
  {
    std::lock_guard lock(mutex);
    auto &entry = memo[lattice.get()];
    if (entry.first.lock() != lattice)
      entry = {lattice, {}};
    auto it = entry.second.find({h, k});
    if (it != entry.second.end())
      return it->second;
  }
  RingElement value = mul(RingElement::generator(lattice, h), RingElement::generator(lattice, k));
  std::lock_guard lock(mutex);
  return memo[lattice.get()].second.emplace(std::pair{h, k}, std::move(value)).first->second;
}

namespace {

/// Left cosets xH as indices; coset_of[g] and one representative each.
struct Cosets {
  std::vector<int> coset_of;
  std::vector<Elem> reps;
};

Cosets left_cosets(const Group &g, const Subgroup &h)
{
  Cosets c;
  c.coset_of.assign(g.order(), -1);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (c.coset_of[x] >= 0)
      continue;
    int id = int(c.reps.size());
    c.reps.push_back(Elem(x));
    for (Elem e : h.elements())
      c.coset_of[g.mul(Elem(x), e)] = id;
  }
  return c;
}

RingElement oracle_generators(const LatticePtr &lat, int hi, int ki)
{
  const Group &g = lat->group();
  const auto &h = (*lat)[std::size_t(hi)];
  const auto &k = (*lat)[std::size_t(ki)];
  Cosets ch = left_cosets(g, h.rep), ck = left_cosets(g, k.rep);
  std::size_t nh = ch.reps.size(), nk = ck.reps.size();
  auto act = [&](Elem x, std::size_t p) {
    std::size_t i = p / nk, j = p % nk;
    return std::size_t(ch.coset_of[g.mul(x, ch.reps[i])]) * nk +
           std::size_t(ck.coset_of[g.mul(x, ck.reps[j])]);
  };

  // Points whose stabiliser is exactly a class representative L, split
  // into N(L)-orbits.
  RingElement r(lat);
  std::vector<char> counted(nh * nk, 0);
  for (std::size_t p = 0; p < nh * nk; ++p) {
    ElementSet stab(g.order());
    for (std::size_t x = 0; x < g.order(); ++x)
      if (act(Elem(x), p) == p)
        stab.insert(Elem(x));
    int l = lat->class_of(stab);
    if (l < 0)
      throw InternalError("stabiliser is not a subgroup");
    if (!(stab == (*lat)[std::size_t(l)].rep.members()) || counted[p])
      continue;
    for (Elem y : (*lat)[std::size_t(l)].normalizer.elements())
      counted[act(y, p)] = 1;
    r.add_to(l, 1);
  }
  return r;
}

} // namespace

RingElement mul_oracle(const RingElement &a, const RingElement &b)
{
  const LatticePtr &lat = common(a, b);
  if (lat->group().order() > 200)
    throw SizeError("orbit-counting multiplication is limited to groups of order 200");
  RingElement r(lat);
  for (auto [h, ca] : a.coeffs())
    for (auto [k, cb] : b.coeffs())
      r = r + checked_mul(ca, cb) * oracle_generators(lat, h, k);
  return r;
}

std::vector<int> max_part(const RingElement &a)
{
  std::vector<int> support;
  for (auto [h, c] : a.coeffs())
    support.push_back(h);
  return a.lattice() ? a.lattice()->maximal(support) : support;
}

} // namespace eqdeg
