#include "eqdeg/lattice.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include "eqdeg/error.hpp"

namespace eqdeg {

std::string SubgroupClass::name() const
{
  return disambiguator ? label + "_" + std::to_string(disambiguator) : label;
}

std::string SubgroupClass::display() const
{
  std::string s = "(" + label + ")";
  if (disambiguator)
    s += "_" + std::to_string(disambiguator);
  return s;
}

namespace {

struct ClassData {
  Subgroup rep;
  std::vector<Elem> gens;
  Subgroup normalizer;
  std::vector<ElementSet> conjugates;
};

// Conjugates of h over a transversal of N(h), with the lexicographically
// minimal one promoted to representative.
ClassData make_class(const Group &g, const Subgroup &h, std::vector<Elem> gens)
{
  if (gens.empty() && h.order() > 1)
    gens = generating_set(g, h);

  ElementSet norm(g.order());
  for (std::size_t y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (Elem s : gens)
      if (!h.contains(g.conj(Elem(y), s))) {
        ok = false;
        break;
      }
    if (ok)
      norm.insert(Elem(y));
  }
  auto norm_elems = norm.elements();

  ClassData out;
  std::vector<char> marked(g.order(), 0);
  std::size_t best = 0;
  Elem best_conjugator = 0;
  for (std::size_t y = 0; y < g.order(); ++y) {
    if (marked[y])
      continue;
    for (Elem n : norm_elems)
      marked[g.mul(Elem(y), n)] = 1;
    out.conjugates.push_back(conjugate(g, h, Elem(y)));
    if (out.conjugates.size() > 1 && lex_less(out.conjugates.back(), out.conjugates[best])) {
      best = out.conjugates.size() - 1;
      best_conjugator = Elem(y);
    }
  }
  out.rep = Subgroup(out.conjugates[best]);
  for (Elem s : gens)
    out.gens.push_back(g.conj(best_conjugator, s));
  ElementSet shifted(g.order());
  for (Elem n : norm_elems)
    shifted.insert(g.conj(best_conjugator, n));
  out.normalizer = Subgroup(std::move(shifted));
  return out;
}

class Builder {
public:
  explicit Builder(const Group &g) : g_(g) {}

  int find(const ElementSet &s) const
  {
    auto range = lookup_.equal_range(s.hash());
    for (auto it = range.first; it != range.second; ++it) {
      auto [c, j] = it->second;
      if (classes_[std::size_t(c)].conjugates[std::size_t(j)] == s)
        return c;
    }
    return -1;
  }

  // Returns the class index and whether it was new.
  std::pair<int, bool> add(const Subgroup &h, std::vector<Elem> gens)
  {
    int existing = find(h.members());
    if (existing >= 0)
      return {existing, false};
    classes_.push_back(make_class(g_, h, std::move(gens)));
    int idx = int(classes_.size()) - 1;
    const auto &conj = classes_.back().conjugates;
    for (std::size_t j = 0; j < conj.size(); ++j)
      lookup_.emplace(conj[j].hash(), std::pair<int, int>{idx, int(j)});
    return {idx, true};
  }

  std::vector<ClassData> &classes() { return classes_; }

private:
  const Group &g_;
  std::vector<ClassData> classes_;
  std::unordered_multimap<std::uint64_t, std::pair<int, int>> lookup_;
};

} // namespace

SubgroupLattice SubgroupLattice::enumerate(GroupPtr group, const LatticeOptions &options)
{
  const Group &g = *group;
  if (g.order() > options.order_cap)
    throw SizeError("group " + g.name() + " of order " + std::to_string(g.order()) +
                    " exceeds the direct-enumeration cap of " +
                    std::to_string(options.order_cap) +
                    "; enumerate it as a product via the Goursat path");

  Builder b(g);
  using Item = std::pair<std::size_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
  auto push = [&](const Subgroup &h, std::vector<Elem> gens) {
    auto [idx, fresh] = b.add(h, std::move(gens));
    if (fresh)
      frontier.emplace(h.order(), idx);
  };

  push(trivial_subgroup(g), {});
  for (std::size_t x = 1; x < g.order(); ++x) {
    Elem e = Elem(x);
    push(generate(g, std::span<const Elem>(&e, 1)), {e});
  }

  std::vector<char> marked(g.order());
  while (!frontier.empty()) {
    int idx = frontier.top().second;
    frontier.pop();
    // Copies: `b` may reallocate its class storage while we extend.
    Subgroup h = b.classes()[std::size_t(idx)].rep;
    std::vector<Elem> gens = b.classes()[std::size_t(idx)].gens;
    std::vector<Elem> norm = b.classes()[std::size_t(idx)].normalizer.elements();

    std::fill(marked.begin(), marked.end(), 0);
    for (Elem e : h.elements())
      marked[e] = 1;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (marked[x])
        continue;
      Subgroup k = extend(g, h, gens, Elem(x));
      auto kgens = gens;
      kgens.push_back(Elem(x));
      push(k, std::move(kgens));

      // <h, x^p t> for t in h, p prime to ord(x), and its N(h)-conjugates
      // all give conjugates of k.
      int ord = g.element_order(Elem(x));
      Elem power = Elem(x);
      for (int p = 1; p < ord; ++p, power = g.mul(power, Elem(x))) {
        if (std::gcd(p, ord) != 1)
          continue;
        for (Elem t : h.elements()) {
          Elem y = g.mul(power, t);
          for (Elem n : norm)
            marked[g.conj(n, y)] = 1;
        }
      }
    }
  }

  SubgroupLattice lat(std::move(group));
  std::vector<Subgroup> reps;
  std::vector<std::vector<Elem>> gens;
  for (auto &c : b.classes()) {
    reps.push_back(std::move(c.rep));
    gens.push_back(std::move(c.gens));
  }
  lat.finalize(std::move(reps), std::move(gens));
  return lat;
}

SubgroupLattice SubgroupLattice::from_representatives(GroupPtr group, std::vector<Subgroup> reps)
{
  SubgroupLattice lat(std::move(group));
  std::vector<std::vector<Elem>> gens(reps.size());
  lat.finalize(std::move(reps), std::move(gens));
  return lat;
}

void SubgroupLattice::finalize(std::vector<Subgroup> reps, std::vector<std::vector<Elem>> gens)
{
  const Group &g = *group_;
  Builder b(g);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto [idx, fresh] = b.add(reps[i], std::move(gens[i]));
    if (!fresh)
      throw InternalError("two representatives of the same conjugacy class in " + g.name());
  }
  auto &data = b.classes();
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
    if (data[a].rep.order() != data[c].rep.order())
      return data[a].rep.order() < data[c].rep.order();
    return lex_less(data[a].rep.members(), data[c].rep.members());
  });

  classes_.clear();
  lookup_.clear();
  for (std::size_t i : order) {
    SubgroupClass c;
    c.rep = std::move(data[i].rep);
    c.generators = std::move(data[i].gens);
    c.normalizer = std::move(data[i].normalizer);
    c.conjugates = std::move(data[i].conjugates);
    c.class_size = c.conjugates.size();
    c.weyl_order = c.normalizer.order() / c.rep.order();
    if (c.class_size * c.normalizer.order() != g.order())
      throw InternalError("orbit-stabiliser count failed for a subgroup class");
    classes_.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < classes_.size(); ++i)
    for (std::size_t j = 0; j < classes_[i].conjugates.size(); ++j)
      lookup_.emplace(classes_[i].conjugates[j].hash(), std::pair<int, int>{int(i), int(j)});

  if (classes_.empty() || classes_.front().order() != 1 ||
      classes_.back().order() != g.order())
    throw InternalError("lattice of " + g.name() + " misses the trivial group or the whole group");

  compute_n_counts();
  assign_auto_labels();
}

void SubgroupLattice::compute_n_counts()
{
  std::size_t n = classes_.size();
  n_counts_.assign(n * n, 0);
  for (std::size_t h = 0; h < n; ++h) {
    std::size_t oh = classes_[h].order();
    for (const auto &conj : classes_[h].conjugates) {
      for (std::size_t l = 0; l <= h; ++l) {
        std::size_t ol = classes_[l].order();
        if (oh % ol != 0 || (ol == oh && l != h))
          continue;
        bool inside = true;
        for (Elem s : classes_[l].generators)
          if (!conj.contains(s)) {
            inside = false;
            break;
          }
        if (inside)
          ++n_counts_[l * n + h];
      }
    }
  }
}

void SubgroupLattice::assign_auto_labels()
{
  std::size_t k = 0;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    k = (i > 0 && classes_[i].order() == classes_[i - 1].order()) ? k + 1 : 1;
    classes_[i].label = "H" + std::to_string(classes_[i].order()) + "." + std::to_string(k);
    classes_[i].auto_label = true;
    classes_[i].disambiguator = 0;
  }
}

int SubgroupLattice::class_of(const ElementSet &s) const
{
  auto range = lookup_.equal_range(s.hash());
  for (auto it = range.first; it != range.second; ++it) {
    auto [c, j] = it->second;
    if (classes_[std::size_t(c)].conjugates[std::size_t(j)] == s)
      return c;
  }
  return -1;
}

int SubgroupLattice::find(std::string_view name) const
{
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].name() == name)
      return int(i);
  return -1;
}

int SubgroupLattice::require(std::string_view name) const
{
  int i = find(name);
  if (i < 0)
    throw ConfigError("no subgroup class named " + std::string(name) + " in " + group_->name());
  return i;
}

std::vector<int> SubgroupLattice::maximal(std::span<const int> subset) const
{
  std::vector<int> out;
  for (int a : subset) {
    bool dominated = false;
    for (int b : subset)
      if (a != b && leq(a, b)) {
        dominated = true;
        break;
      }
    if (!dominated)
      out.push_back(a);
  }
  return out;
}

void SubgroupLattice::set_label(int i, std::string label, bool auto_label, int disambiguator)
{
  auto &c = classes_[std::size_t(i)];
  c.label = std::move(label);
  c.auto_label = auto_label;
  c.disambiguator = disambiguator;
}

void SubgroupLattice::save(std::ostream &out, std::string_view code_version) const
{
  out << "eqdeg-lattice " << code_version << '\n';
  out << "group " << group_->name() << ' ' << group_->order() << '\n';
  out << "classes " << classes_.size() << '\n';
  for (const auto &c : classes_) {
    out << c.order() << ' ' << c.generators.size();
    for (Elem s : c.generators)
      out << ' ' << s;
    out << '\n';
  }
}

std::optional<SubgroupLattice> SubgroupLattice::load(GroupPtr group, std::istream &in,
                                                     std::string_view code_version)
{
  std::string word, version, name;
  std::size_t order = 0, count = 0;
  if (!(in >> word >> version) || word != "eqdeg-lattice" || version != code_version)
    return std::nullopt;
  if (!(in >> word >> name >> order) || word != "group" || name != group->name() ||
      order != group->order())
    return std::nullopt;
  if (!(in >> word >> count) || word != "classes")
    return std::nullopt;
  std::vector<Subgroup> reps;
  std::vector<std::vector<Elem>> gens;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t ord = 0, ng = 0;
    if (!(in >> ord >> ng))
      return std::nullopt;
    std::vector<Elem> gs(ng);
    for (auto &s : gs) {
      unsigned v = 0;
      if (!(in >> v) || v >= group->order())
        return std::nullopt;
      s = Elem(v);
    }
    Subgroup h = generate(*group, gs);
    if (h.order() != ord)
      return std::nullopt;
    reps.push_back(std::move(h));
    gens.push_back(std::move(gs));
  }
  SubgroupLattice lat(std::move(group));
  try {
    lat.finalize(std::move(reps), std::move(gens));
  } catch (const InternalError &) {
    return std::nullopt;  // corrupted cache: duplicate or missing classes
  }
  return lat;
}

std::vector<bool> class_order(const SubgroupLattice &lattice)
{
  std::size_t n = lattice.size();
  std::vector<bool> out(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t h = 0; h < n; ++h)
      out[k * n + h] = lattice.leq(int(k), int(h));
  return out;
}

} // namespace eqdeg
