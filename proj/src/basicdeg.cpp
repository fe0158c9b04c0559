#include "eqdeg/basicdeg.hpp"

#include "eqdeg/error.hpp"

namespace eqdeg {

namespace {

std::vector<std::int64_t> sign_marks(const std::vector<int> &dims)
{
  std::vector<std::int64_t> m;
  for (int d : dims)
    m.push_back(d % 2 ? -1 : 1);
  return m;
}

} // namespace

BasicDegree basic_degree(const RepHandle &rep, const LatticePtr &lattice)
{
  BasicDegree out{rep.name, RingElement(lattice), orbit_types(rep, *lattice)};
  std::vector<bool> active(lattice->size(), false);
  for (int c : out.orbit_types.classes)
    active[std::size_t(c)] = true;
  auto dims = fixed_dims(rep.character(), *lattice);
  for (auto [h, c] : solve_marks(*lattice, sign_marks(dims), active))
    out.value.add_to(h, c);
  return out;
}

RingElement basic_degree_all_classes(const RepHandle &rep, const LatticePtr &lattice)
{
  auto dims = fixed_dims(rep.character(), *lattice);
  RingElement r(lattice);
  for (auto [h, c] : solve_marks(*lattice, sign_marks(dims), std::vector<bool>(lattice->size(), true)))
    r.add_to(h, c);
  return r;
}

RingElement basic_degree_oracle(const RepHandle &rep, const LatticePtr &lattice)
{
  // n(L,K)|W(K)| is the number of points of G/K fixed by L; read it off the
  // oracle product (L) * (K), whose coefficient at (L) equals that count.
  const auto &lat = *lattice;
  auto types = orbit_types(rep, lat);
  auto dims = fixed_dims(rep.character(), lat);
  RingElement r(lattice);
  std::map<int, std::int64_t> coeff;
  for (auto l = types.classes.rbegin(); l != types.classes.rend(); ++l) {
    std::int64_t rest = dims[std::size_t(*l)] % 2 ? -1 : 1;
    for (auto [k, ck] : coeff) {
      auto prod = mul_oracle(RingElement::generator(lattice, *l), RingElement::generator(lattice, k));
      rest -= ck * prod.coeff(*l);
    }
    std::int64_t w = std::int64_t(lat[std::size_t(*l)].weyl_order);
    if (rest % w != 0)
      throw InternalError("inexact division at class " + lat[std::size_t(*l)].name());
    coeff[*l] = rest / w;
  }
  for (auto [h, c] : coeff)
    r.add_to(h, c);
  return r;
}

std::vector<LeadingCoefficient> leading_coefficients_check(const BasicDegree &deg)
{
  const auto &lat = *deg.value.lattice();
  RingElement rest = deg.value - RingElement::unit(deg.value.lattice());
  std::vector<LeadingCoefficient> out;
  for (int c : max_part(rest)) {
    LeadingCoefficient lc;
    lc.cls = c;
    lc.coeff = rest.coeff(c);
    lc.weyl_order = lat[std::size_t(c)].weyl_order;
    auto it = deg.orbit_types.fixed_dims.find(c);
    lc.fixed_dim = it == deg.orbit_types.fixed_dims.end() ? -1 : it->second;
    std::int64_t expected = lc.weyl_order == 2 ? -1 : lc.weyl_order == 1 ? -2 : 0;
    lc.ok = expected != 0 && lc.coeff == expected && lc.fixed_dim % 2 == 1;
    out.push_back(lc);
  }
  return out;
}

RingElement linear_map_degree(const LatticePtr &lattice,
                              const std::vector<std::pair<const BasicDegree *, int>> &factors)
{
  RingElement r = RingElement::unit(lattice);
  for (auto [deg, m] : factors) {
    if (m < 0)
      throw DomainError("negative multiplicity");
    if (deg->value.lattice() != lattice)
      throw ConfigError("basic degree over a different group");
    if (m % 2)
      r = mul(r, deg->value);
  }
  return r;
}

} // namespace eqdeg
