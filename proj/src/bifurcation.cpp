#include "eqdeg/bifurcation.hpp"

#include <algorithm>
#include <map>

#include "eqdeg/error.hpp"

namespace eqdeg {

namespace {

const SpectralLine &find_line(const std::vector<SpectralLine> &lines, int k, int m)
{
  for (const auto &l : lines)
    if (l.k == k && l.m == m)
      return l;
  throw DomainError("no spectral line (k = " + std::to_string(k) + ", m = " + std::to_string(m) +
                    ") in the computed spectrum");
}

/// Overgroup family of each k = 1 branch class: orbit types above the class
/// all carry the family key.
const std::map<std::string, std::string> &overgroup_families()
{
  static const std::map<std::string, std::string> families{
      {"D4p^{Z2-} x_{D4} D4", "D(4n)p^{Z(2n)-} x_{D4} D4"},
      {"D3 x_{D3} D3", "D(3n)^{Zn} x_{D3} D3"},
      {"O(2)- x D3", "O(2)- x D3"},
      {"O(2)p^{D2d} x^{D1} D2", "O(2)p^{D2d} x^{D1} D2"},
      {"O(2)p^{O(2)-} x^{D2} D4", "O(2)p^{O(2)-} x^{D2} D4"},
      {"S4- x_{S4} S4", "S4- x_{S4} S4"},
  };
  return families;
}

} // namespace

bool branch_distinctness_check(const std::vector<std::string> &classes)
{
  std::vector<std::string> keys;
  for (const auto &c : classes) {
    auto it = overgroup_families().find(c);
    if (it == overgroup_families().end())
      throw UnsupportedClassError("no overgroup family known for " + c);
    keys.push_back(it->second);
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

BifurcationReport bifurcation_index(Workspace &ws, const PhysicalParams &p, int k, int m,
                                    const std::vector<SpectralLine> &lines, double rel_tol)
{
  if (k == 0 && m == 0)
    throw DomainError("no bifurcation at trivial index (k, m) = (0, 0)");
  const SpectralLine &line = find_line(lines, k, m);

  BifurcationReport r;
  r.k = k;
  r.m = m;
  r.s = line.s;
  r.mu_crit = critical_value(p, line.s);
  r.kernel_dim = 3 * (2 * k + 1);
  double s2 = line.s2();
  for (const auto &l : lines) {
    double d = std::abs(l.s2() - s2);
    if (d <= rel_tol * std::max(l.s2(), s2))
      r.coincidence.emplace_back(l.k, l.m);
    else if (l.s2() < s2)
      r.unit_factors.emplace_back(l.k, l.m);
  }
  r.simple = r.coincidence.size() == 1;
  if (p.g_tilde - p.g <= 0)
    throw DomainError("immiscibility violated");

  if (!r.simple) {
    r.branches.push_back({"unspecified", "qualitative"});
    r.note = "critical value is not isotypic simple; the kernel spans several isotypic "
             "components, so only global bifurcation is asserted";
    return r;
  }

  if (k == 0) {
    auto s4 = ws.lattice("S4");
    const auto &deg = ws.basic_degree("S4", "W4");
    auto lifted = lift_s4(deg.value);
    r.b = TruncatedEulerElement::unit("O(3)xS4") - lifted;
    for (const auto &c : max_coeff_survival(true, *r.b, s4.get()))
      r.branches.push_back({c, "at-least"});
    r.note = "O(3) acts trivially on V0 (x) W4; the degree is the S4 degree of W4 lifted";
  } else if (k == 1) {
    const auto &deg = ws.basic_degree("S4pxS4", "W3mxW4");
    auto full = assemble_deg_V1_W4(deg.value);
    r.b = TruncatedEulerElement::unit("O(3)xS4") - full;
    for (const auto &c : max_coeff_survival(true, *r.b))
      r.branches.push_back({c, "exact-maximal"});
    std::vector<std::string> names;
    for (const auto &b : r.branches)
      names.push_back(b.orbit_type);
    if (!branch_distinctness_check(names))
      throw InternalError("two k = 1 branch classes share an overgroup family");
    r.note = "degree assembled from the S4p x S4 computation through the restriction table";
  } else {
    r.branches.push_back({"unspecified", "qualitative"});
    r.note = "b is nonzero because V_k (x) W4 carries a nontrivial S1-action for k >= 2; "
             "orbit types are not resolved";
  }
  return r;
}

std::vector<BifurcationReport> scan(Workspace &ws, const PhysicalParams &p, double mu_max,
                                    const std::vector<SpectralLine> &lines, double rel_tol)
{
  if (mu_max > coverage_bound(p, lines))
    throw DomainError("mu_max = " + std::to_string(mu_max) +
                      " exceeds the range covered by the computed spectrum");
  std::vector<const SpectralLine *> hits;
  for (const auto &l : lines)
    if (!(l.k == 0 && l.m == 0) && critical_value(p, l.s) < mu_max)
      hits.push_back(&l);
  std::sort(hits.begin(), hits.end(), [](const SpectralLine *a, const SpectralLine *b) {
    if (a->s != b->s)
      return a->s < b->s;
    return std::pair(a->k, a->m) < std::pair(b->k, b->m);
  });
  std::vector<BifurcationReport> out;
  for (const auto *l : hits)
    out.push_back(bifurcation_index(ws, p, l->k, l->m, lines, rel_tol));
  return out;
}

} // namespace eqdeg
