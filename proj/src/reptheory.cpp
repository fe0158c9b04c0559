#include "eqdeg/reptheory.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "eqdeg/error.hpp"

namespace eqdeg {

ElementClasses element_classes(const Group &g)
{
  ElementClasses out;
  out.class_of.assign(g.order(), -1);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (out.class_of[x] >= 0)
      continue;
    int id = int(out.members.size());
    out.members.emplace_back();
    for (std::size_t y = 0; y < g.order(); ++y) {
      Elem c = g.conj(Elem(y), Elem(x));
      if (out.class_of[c] < 0) {
        out.class_of[c] = id;
        out.members.back().push_back(c);
      }
    }
  }
  return out;
}

long inner_product(const Character &a, const Character &b)
{
  const Group &g = *a.group;
  long sum = 0;
  for (std::size_t x = 0; x < g.order(); ++x)
    sum += a.values[x] * b.values[g.inv(Elem(x))];
  if (sum % long(g.order()) != 0)
    throw InternalError("inner product of " + a.name + " and " + b.name + " is not an integer");
  return sum / long(g.order());
}

Character RepHandle::character() const
{
  Character chi{group, name, std::vector<long>(matrices.size())};
  for (std::size_t g = 0; g < matrices.size(); ++g)
    for (int i = 0; i < dim; ++i)
      chi.values[g] += matrices[g][std::size_t(i * dim + i)];
  return chi;
}

std::vector<long> RepHandle::apply(Elem g, const std::vector<long> &v) const
{
  const auto &m = matrices[g];
  std::vector<long> out(std::size_t(dim), 0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      out[std::size_t(i)] += m[std::size_t(i * dim + j)] * v[std::size_t(j)];
  return out;
}

namespace {

const Permutation &as_permutation(const Group &g, Elem x)
{
  const auto *p = std::get_if<Permutation>(&g.tag(x));
  if (!p || p->images.size() != 4)
    throw ConfigError(g.name() + " is not S4 on four points");
  return *p;
}

int permutation_sign(const Permutation &p)
{
  int inversions = 0;
  for (std::size_t i = 0; i < p.images.size(); ++i)
    for (std::size_t j = i + 1; j < p.images.size(); ++j)
      inversions += p.images[i] > p.images[j];
  return inversions % 2 ? -1 : 1;
}

/// Matrix of the permutation action of `sigma` on the sum-zero subspace of
/// R^n in the basis e_i - e_{n-1}.
std::vector<long> sum_zero_matrix(const std::vector<int> &sigma)
{
  int n = int(sigma.size());
  int d = n - 1;
  std::vector<long> m(std::size_t(d * d), 0);
  for (int i = 0; i < d; ++i) {
    int a = sigma[std::size_t(i)], b = sigma[std::size_t(n - 1)];
    if (a < d)
      m[std::size_t(a * d + i)] += 1;
    if (b < d)
      m[std::size_t(b * d + i)] -= 1;
  }
  return m;
}

std::vector<int> pairing_action(const Permutation &p)
{
  // Pairings of {0,1,2,3} indexed by the partner of 0.
  std::vector<int> sigma(3);
  for (int partner = 1; partner <= 3; ++partner) {
    int a = p.images[0], b = p.images[std::size_t(partner)];
    int image_partner = a == 0 ? b : (b == 0 ? a : 6 - a - b);
    sigma[std::size_t(partner - 1)] = image_partner - 1;
  }
  return sigma;
}

std::vector<long> matrix3(const Matrix3 &m)
{
  return std::vector<long>(m.begin(), m.end());
}

RepHandle s4_rep(GroupPtr g, std::string_view name)
{
  RepHandle r{g, std::string(name), 0, {}};
  for (std::size_t x = 0; x < g->order(); ++x) {
    const Permutation &p = as_permutation(*g, Elem(x));
    std::vector<int> sigma(p.images.begin(), p.images.end());
    if (name == "W0") {
      r.dim = 1;
      r.matrices.push_back({1});
    } else if (name == "W1") {
      r.dim = 1;
      r.matrices.push_back({permutation_sign(p)});
    } else if (name == "W2") {
      r.dim = 2;
      r.matrices.push_back(sum_zero_matrix(pairing_action(p)));
    } else if (name == "W3") {
      r.dim = 3;
      r.matrices.push_back(matrix3(octahedral_rotation(p)));
    } else if (name == "W4") {
      r.dim = 3;
      r.matrices.push_back(sum_zero_matrix(sigma));
    } else if (name == "R4") {
      r.dim = 4;
      std::vector<long> m(16, 0);
      for (int i = 0; i < 4; ++i)
        m[std::size_t(sigma[std::size_t(i)] * 4 + i)] = 1;
      r.matrices.push_back(std::move(m));
    } else {
      throw ConfigError("unknown representation " + std::string(name) + " of S4");
    }
  }
  return r;
}

} // namespace

std::vector<Elem> s4_class_representatives(const Group &s4)
{
  std::vector<Elem> out;
  for (const char *c : {"(1)", "(12)", "(12)(34)", "(123)", "(1234)"}) {
    int idx = s4.find(parse_cycles(c, 4));
    if (idx < 0)
      throw ConfigError(s4.name() + " is not S4 on four points");
    out.push_back(Elem(idx));
  }
  return out;
}

std::vector<Character> character_table_s4(GroupPtr s4)
{
  std::vector<Character> out;
  for (const char *name : {"W0", "W1", "W2", "W3", "W4"})
    out.push_back(s4_rep(s4, name).character());
  return out;
}

std::vector<Character> character_table_s4p(GroupPtr s4p)
{
  auto s4 = build_group("S4");
  auto base = character_table_s4(s4);
  std::vector<Character> out;
  for (int twist = 0; twist < 2; ++twist)
    for (const auto &chi : base) {
      Character c{s4p, chi.name + (twist ? "-" : ""), std::vector<long>(s4p->order())};
      for (std::size_t x = 0; x < s4p->order(); ++x) {
        const auto *m = std::get_if<Matrix3>(&s4p->tag(Elem(x)));
        if (!m)
          throw ConfigError(s4p->name() + " is not the group of signed permutation matrices");
        auto [perm, sign] = octahedral_decompose(*m);
        c.values[x] = chi(Elem(s4->find(perm))) * (twist ? sign : 1);
      }
      out.push_back(std::move(c));
    }
  return out;
}

std::map<std::string, long> decompose(const Character &chi, const std::vector<Character> &irreducibles)
{
  std::map<std::string, long> out;
  const Group &g = *chi.group;
  for (const auto &irr : irreducibles) {
    long sum = 0;
    for (std::size_t x = 0; x < g.order(); ++x)
      sum += chi.values[x] * irr.values[g.inv(Elem(x))];
    if (sum % long(g.order()) != 0)
      throw DomainError(chi.name + " is not a character: non-integral multiplicity of " +
                        irr.name);
    if (long m = sum / long(g.order()); m != 0)
      out[irr.name] = m;
  }
  return out;
}

RepHandle make_rep(GroupPtr g, std::string_view name)
{
  if (name == "W0" && g->name() != "S4") {
    RepHandle r{g, "W0", 1, std::vector<std::vector<long>>(g->order(), {1})};
    return r;
  }
  if (g->name() == "S4")
    return s4_rep(g, name);
  if (g->name() == "S4p" && name == "W3m") {
    RepHandle r{g, "W3m", 3, {}};
    for (std::size_t x = 0; x < g->order(); ++x)
      r.matrices.push_back(matrix3(std::get<Matrix3>(g->tag(Elem(x)))));
    return r;
  }
  throw ConfigError("unknown representation " + std::string(name) + " of " + g->name());
}

RepHandle tensor(GroupPtr product, const RepHandle &a, const RepHandle &b)
{
  const Group &g = *product;
  if (!g.is_product() || g.first_factor()->order() != a.group->order() ||
      g.second_factor()->order() != b.group->order())
    throw ConfigError(g.name() + " is not the product of the representations' groups");
  RepHandle r{product, a.name + "x" + b.name, a.dim * b.dim, {}};
  r.matrices.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto [p, q] = g.split(Elem(x));
    const auto &ma = a.matrices[p];
    const auto &mb = b.matrices[q];
    auto &m = r.matrices[x];
    m.assign(std::size_t(r.dim * r.dim), 0);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j)
        for (int k = 0; k < b.dim; ++k)
          for (int l = 0; l < b.dim; ++l)
            m[std::size_t((i * b.dim + k) * r.dim + j * b.dim + l)] =
                ma[std::size_t(i * a.dim + j)] * mb[std::size_t(k * b.dim + l)];
  }
  return r;
}

int fixed_dim(const Character &chi, const Subgroup &h)
{
  long sum = 0;
  for (Elem x : h.elements())
    sum += chi(x);
  if (sum % long(h.order()) != 0)
    throw InternalError("fixed-point dimension of " + chi.name + " is not an integer");
  return int(sum / long(h.order()));
}

std::vector<int> fixed_dims(const Character &chi, const SubgroupLattice &lattice)
{
  std::vector<int> out;
  for (const auto &c : lattice.classes())
    out.push_back(fixed_dim(chi, c.rep));
  return out;
}

std::vector<std::vector<long>> fixed_basis(const RepHandle &rep, const Subgroup &h)
{
  std::size_t d = std::size_t(rep.dim);
  std::vector<long> sum(d * d, 0);
  for (Elem x : h.elements())
    for (std::size_t i = 0; i < d * d; ++i)
      sum[i] += rep.matrices[x][i];

  // Fraction-free elimination keeps the selected columns exact.
  std::vector<std::vector<long>> echelon, basis;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<long> col(d), v(d);
    for (std::size_t r = 0; r < d; ++r)
      col[r] = v[r] = sum[r * d + c];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      long a = echelon[e][pivots[e]], b = v[pivots[e]];
      if (b == 0)
        continue;
      long g = 0;
      for (std::size_t r = 0; r < d; ++r) {
        v[r] = a * v[r] - b * echelon[e][r];
        g = std::gcd(g, v[r]);
      }
      if (g > 1)
        for (auto &x : v)
          x /= g;
    }
    auto nz = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
    if (nz == v.end())
      continue;
    pivots.push_back(std::size_t(nz - v.begin()));
    echelon.push_back(std::move(v));
    basis.push_back(std::move(col));
  }
  return basis;
}

Subgroup stabilizer(const RepHandle &rep, const std::vector<long> &v)
{
  ElementSet s(rep.group->order());
  for (std::size_t x = 0; x < rep.group->order(); ++x)
    if (rep.apply(Elem(x), v) == v)
      s.insert(Elem(x));
  return Subgroup(std::move(s));
}

Subgroup fixed_space_stabilizer(const RepHandle &rep, const Subgroup &h)
{
  auto basis = fixed_basis(rep, h);
  ElementSet s(rep.group->order());
  for (std::size_t x = 0; x < rep.group->order(); ++x) {
    bool fixes = std::all_of(basis.begin(), basis.end(),
                             [&](const auto &b) { return rep.apply(Elem(x), b) == b; });
    if (fixes)
      s.insert(Elem(x));
  }
  return Subgroup(std::move(s));
}

bool random_stabilizer_check(const RepHandle &rep, const Subgroup &h, std::uint64_t seed,
                             int attempts)
{
  auto basis = fixed_basis(rep, h);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  for (int t = 0; t < attempts; ++t) {
    std::vector<long> v(std::size_t(rep.dim), 0);
    for (const auto &b : basis) {
      long c = coeff(rng);
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += c * b[i];
    }
    if (stabilizer(rep, v) == h)
      return true;
  }
  return false;
}

OrbitTypeSet orbit_types(const RepHandle &rep, const SubgroupLattice &lattice)
{
  auto dims = fixed_dims(rep.character(), lattice);
  OrbitTypeSet out;
  int n = int(lattice.size());
  for (int h = 0; h < n; ++h) {
    // Fixed dimensions only shrink going up, so comparing against every
    // strict overgroup class is the same as comparing against minimal ones.
    bool strict = true;
    for (int k = h + 1; k < n && strict; ++k)
      if (lattice.leq(h, k) && dims[std::size_t(k)] == dims[std::size_t(h)])
        strict = false;
    if (!strict)
      continue;
    if (!random_stabilizer_check(rep, lattice[std::size_t(h)].rep, 0x5eed0000u + std::uint64_t(h)))
      throw InternalError("orbit type " + lattice[std::size_t(h)].name() + " of " + rep.name +
                          " failed random stabilizer validation");
    out.classes.push_back(h);
    out.fixed_dims[h] = dims[std::size_t(h)];
  }
  return out;
}

int maximal_tensor_type(const RepHandle &rep1, const SubgroupLattice &lat1, int k,
                        const RepHandle &rep2, const SubgroupLattice &lat2, int h,
                        const SubgroupLattice &product)
{
  auto signs = [](const RepHandle &rep, const SubgroupLattice &lat, int c) {
    const auto &cls = lat[std::size_t(c)];
    auto basis = fixed_basis(rep, cls.rep);
    if (basis.size() != 1)
      throw DomainError("fixed space of " + cls.name() + " in " + rep.name +
                        " is not one-dimensional");
    const auto &b = basis.front();
    std::size_t i = std::size_t(std::find_if(b.begin(), b.end(), [](long x) { return x != 0; }) -
                                b.begin());
    std::vector<std::pair<Elem, int>> out;
    for (Elem a : cls.normalizer.elements())
      out.emplace_back(a, rep.apply(a, b)[i] == b[i] ? 1 : -1);
    return out;
  };
  auto s1 = signs(rep1, lat1, k);
  auto s2 = signs(rep2, lat2, h);
  const Group &g = product.group();
  ElementSet s(g.order());
  for (auto [a, sa] : s1)
    for (auto [b, sb] : s2)
      if (sa == sb)
        s.insert(g.pair(a, b));
  int c = product.class_of(s);
  if (c < 0)
    throw InternalError("predicted maximal tensor type is not a subgroup");
  return c;
}

} // namespace eqdeg
