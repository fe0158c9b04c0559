#include "eqdeg/goursat.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "eqdeg/error.hpp"
#include "eqdeg/labels.hpp"

namespace eqdeg {

namespace {

/// h / n for n normal in h, as an abstract group on coset indices.
struct Quotient {
  std::vector<int> coset;  // per element of the ambient group, -1 outside h
  std::vector<Elem> reps;
  std::vector<int> table;
  std::vector<int> orders;

  int size() const { return int(reps.size()); }
  int mul(int a, int b) const { return table[std::size_t(a) * reps.size() + std::size_t(b)]; }
};

Quotient make_quotient(const Group &g, const Subgroup &h, const Subgroup &n)
{
  Quotient q;
  q.coset.assign(g.order(), -1);
  for (Elem x : h.elements()) {
    if (q.coset[x] >= 0)
      continue;
    int id = int(q.reps.size());
    q.reps.push_back(x);
    for (Elem m : n.elements())
      q.coset[g.mul(x, m)] = id;
  }
  std::size_t s = q.reps.size();
  q.table.resize(s * s);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b)
      q.table[a * s + b] = q.coset[g.mul(q.reps[a], q.reps[b])];
  q.orders.resize(s);
  for (std::size_t a = 0; a < s; ++a) {
    int k = 1;
    for (int x = int(a); x != 0; x = q.mul(x, int(a)))
      ++k;
    q.orders[a] = k;
  }
  return q;
}

std::vector<int> quotient_generators(const Quotient &q)
{
  std::vector<int> candidates(std::size_t(q.size()));
  for (int i = 0; i < q.size(); ++i)
    candidates[std::size_t(i)] = i;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int a, int b) { return q.orders[std::size_t(a)] > q.orders[std::size_t(b)]; });
  std::vector<char> in(std::size_t(q.size()), 0);
  in[0] = 1;
  std::vector<int> closure{0}, gens;
  for (int c : candidates) {
    if (in[std::size_t(c)])
      continue;
    gens.push_back(c);
    for (std::size_t i = 0; i < closure.size(); ++i)
      for (int s : gens) {
        int t = q.mul(closure[i], s);
        if (!in[std::size_t(t)]) {
          in[std::size_t(t)] = 1;
          closure.push_back(t);
        }
      }
  }
  return gens;
}

/// All isomorphisms a -> b, as maps on coset indices.
std::vector<std::vector<int>> isomorphisms(const Quotient &a, const Quotient &b)
{
  std::vector<std::vector<int>> out;
  if (a.size() != b.size())
    return out;
  auto sorted_orders = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted_orders(a.orders) != sorted_orders(b.orders))
    return out;

  auto gens = quotient_generators(a);
  std::vector<int> images(gens.size(), 0);
  std::vector<int> map(std::size_t(a.size()));
  std::vector<char> hit(std::size_t(b.size()));

  auto try_extend = [&]() -> bool {
    std::fill(map.begin(), map.end(), -1);
    map[0] = 0;
    std::vector<int> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        int y = a.mul(x, gens[j]);
        int fy = b.mul(map[std::size_t(x)], images[j]);
        if (map[std::size_t(y)] < 0) {
          map[std::size_t(y)] = fy;
          queue.push_back(y);
        } else if (map[std::size_t(y)] != fy) {
          return false;
        }
      }
    }
    std::fill(hit.begin(), hit.end(), 0);
    for (int v : map) {
      if (hit[std::size_t(v)])
        return false;
      hit[std::size_t(v)] = 1;
    }
    return true;
  };

  // Odometer over generator images of matching order.
  std::vector<std::vector<int>> choices(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (int y = 0; y < b.size(); ++y)
      if (b.orders[std::size_t(y)] == a.orders[std::size_t(gens[j])])
        choices[j].push_back(y);
  std::vector<std::size_t> pos(gens.size(), 0);
  while (true) {
    for (std::size_t j = 0; j < gens.size(); ++j)
      images[j] = choices[j][pos[j]];
    if (try_extend())
      out.push_back(map);
    std::size_t j = 0;
    while (j < gens.size() && ++pos[j] == choices[j].size())
      pos[j++] = 0;
    if (j == gens.size())
      break;
  }
  return out;
}

/// Normal subgroups of `h`, drawn from every conjugate of every class.
std::vector<Subgroup> normal_subgroups(const SubgroupLattice &lat, const Subgroup &h)
{
  const Group &g = lat.group();
  auto gens = generating_set(g, h);
  std::vector<Subgroup> out;
  for (const auto &c : lat.classes()) {
    if (h.order() % c.order() != 0)
      continue;
    for (const auto &conj : c.conjugates) {
      if (!conj.subset_of(h.members()))
        continue;
      Subgroup n(conj);
      bool normal = true;
      for (Elem s : gens)
        for (Elem e : n.elements())
          if (!n.contains(g.conj(s, e))) {
            normal = false;
            break;
          }
      if (normal)
        out.push_back(std::move(n));
    }
  }
  return out;
}

/// Elements x with x a x^-1 = b and x a_o x^-1 = b_o.
std::vector<Elem> carriers(const Group &g, const Subgroup &a, const Subgroup &a_o,
                           const Subgroup &b, const Subgroup &b_o)
{
  std::vector<Elem> out;
  auto ga = generating_set(g, a);
  auto gao = generating_set(g, a_o);
  for (std::size_t i = 0; i < g.order(); ++i) {
    Elem x = Elem(i);
    bool ok = true;
    for (Elem s : ga)
      if (!b.contains(g.conj(x, s))) {
        ok = false;
        break;
      }
    for (Elem s : gao)
      if (ok && !b_o.contains(g.conj(x, s)))
        ok = false;
    if (ok)
      out.push_back(x);
  }
  return out;
}

} // namespace

Subgroup reconstruct(const Group &product, const GoursatDatum &d)
{
  ElementSet s(product.order());
  for (Elem x : d.h.elements())
    for (Elem z : d.k_o.elements())
      s.insert(product.pair(x, product.second_factor()->mul(d.theta[x], z)));
  return Subgroup(std::move(s));
}

GoursatDatum decompose(const Group &product, const Subgroup &s)
{
  const Group &g1 = *product.first_factor();
  const Group &g2 = *product.second_factor();
  ElementSet h(g1.order()), h_o(g1.order()), k(g2.order()), k_o(g2.order());
  GoursatDatum d;
  d.theta.assign(g1.order(), 0);
  for (Elem e : s.elements()) {
    auto [a, b] = product.split(e);
    if (!h.contains(a))
      d.theta[a] = b;
    h.insert(a);
    k.insert(b);
    if (b == 0)
      h_o.insert(a);
    if (a == 0)
      k_o.insert(b);
  }
  d.h = Subgroup(std::move(h));
  d.h_o = Subgroup(std::move(h_o));
  d.k = Subgroup(std::move(k));
  d.k_o = Subgroup(std::move(k_o));
  return d;
}

bool are_conjugate_amalgamated(const Group &product, const GoursatDatum &a,
                               const GoursatDatum &b)
{
  if (a.h.order() != b.h.order() || a.h_o.order() != b.h_o.order() ||
      a.k.order() != b.k.order() || a.k_o.order() != b.k_o.order())
    return false;
  if (a.h.order() / a.h_o.order() != b.k.order() / b.k_o.order())
    return false;
  const Group &g1 = *product.first_factor();
  const Group &g2 = *product.second_factor();
  auto xs = carriers(g1, a.h, a.h_o, b.h, b.h_o);
  if (xs.empty())
    return false;
  auto ys = carriers(g2, a.k, a.k_o, b.k, b.k_o);
  if (ys.empty())
    return false;
  auto gens = generating_set(g1, a.h);
  for (Elem x : xs)
    for (Elem y : ys) {
      bool ok = true;
      for (Elem s : gens) {
        Elem lhs = b.theta[g1.conj(x, s)];
        Elem rhs = g2.conj(y, a.theta[s]);
        if (!b.k_o.contains(g2.mul(g2.inv(lhs), rhs))) {
          ok = false;
          break;
        }
      }
      if (ok)
        return true;
    }
  return false;
}

SubgroupLattice goursat_enumerate(GroupPtr product, const SubgroupLattice &first,
                                  const SubgroupLattice &second)
{
  const Group &g = *product;
  if (!g.is_product() || g.first_factor()->order() != first.group().order() ||
      g.second_factor()->order() != second.group().order())
    throw ConfigError(g.name() + " is not the product of the two lattices' groups");
  const Group &g1 = first.group();

  struct Side {
    Subgroup sub;
    Subgroup normal;
    Quotient quotient;
  };
  auto sides = [](const SubgroupLattice &lat) {
    std::vector<std::vector<Side>> out(lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const Subgroup &h = lat[i].rep;
      for (auto &n : normal_subgroups(lat, h)) {
        Quotient q = make_quotient(lat.group(), h, n);
        out[i].push_back({h, std::move(n), std::move(q)});
      }
    }
    return out;
  };
  auto left = sides(first);
  auto right = sides(second);

  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>,
           std::vector<GoursatDatum>>
      buckets;
  for (std::size_t i = 0; i < left.size(); ++i)
    for (const auto &a : left[i])
      for (std::size_t j = 0; j < right.size(); ++j)
        for (const auto &b : right[j]) {
          if (a.quotient.size() != b.quotient.size())
            continue;
          auto &bucket = buckets[{i, j, a.normal.order(), b.normal.order()}];
          for (const auto &iso : isomorphisms(a.quotient, b.quotient)) {
            GoursatDatum d{a.sub, a.normal, b.sub, b.normal, std::vector<Elem>(g1.order(), 0)};
            for (Elem x : a.sub.elements())
              d.theta[x] = b.quotient.reps[std::size_t(iso[std::size_t(a.quotient.coset[x])])];
            bool seen = std::any_of(bucket.begin(), bucket.end(), [&](const GoursatDatum &e) {
              return are_conjugate_amalgamated(g, e, d);
            });
            if (!seen)
              bucket.push_back(std::move(d));
          }
        }

  std::vector<Subgroup> reps;
  for (const auto &[key, bucket] : buckets)
    for (const auto &d : bucket) {
      Subgroup s = reconstruct(g, d);
      if (s.order() != d.h.order() * d.k_o.order())
        throw InternalError("Goursat order identity failed");
      reps.push_back(std::move(s));
    }
  return SubgroupLattice::from_representatives(std::move(product), std::move(reps));
}

std::string AmalgamatedName::label() const
{
  if (l == "Z1")
    return h + " x " + k;
  if (l == "Z2")
    return h + "^{" + h_o + "} x^{" + k_o + "} " + k;
  std::string out = h;
  if (h_o != "Z1")
    out += "^{" + h_o + "}";
  out += " x_{" + l + "}";
  if (k_o != "Z1")
    out += "^{" + k_o + "}";
  return out + " " + k;
}

AmalgamatedName name_amalgamated(const SubgroupLattice &product, const Subgroup &s,
                                 const SubgroupLattice &first, const SubgroupLattice &second)
{
  const Group &g = product.group();
  GoursatDatum d = decompose(g, s);
  AmalgamatedName out;
  auto part = [&](const SubgroupLattice &lat, const Subgroup &sub) {
    int c = lat.class_of(sub.members());
    if (c < 0)
      throw InternalError("projection is not a subgroup of " + lat.group().name());
    const auto &cls = lat[std::size_t(c)];
    out.auto_label = out.auto_label || cls.auto_label;
    return cls.name();
  };
  out.h = part(first, d.h);
  out.h_o = part(first, d.h_o);
  out.k = part(second, d.k);
  out.k_o = part(second, d.k_o);
  Quotient q = make_quotient(*g.first_factor(), d.h, d.h_o);
  out.l = small_group_name(q.orders);
  int c = product.class_of(s.members());
  if (c >= 0)
    out.disambiguator = product[std::size_t(c)].disambiguator;
  return out;
}

void label_product(SubgroupLattice &product, const SubgroupLattice &first,
                   const SubgroupLattice &second)
{
  std::vector<AmalgamatedName> names;
  std::map<std::string, int> counts;
  for (std::size_t i = 0; i < product.size(); ++i) {
    names.push_back(name_amalgamated(product, product[i].rep, first, second));
    ++counts[names.back().label()];
  }
  std::map<std::string, int> next;
  for (std::size_t i = 0; i < product.size(); ++i) {
    std::string label = names[i].label();
    int dis = counts[label] > 1 ? ++next[label] : 0;
    product.set_label(int(i), label, names[i].auto_label, dis);
  }
}

} // namespace eqdeg
