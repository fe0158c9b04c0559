#include "eqdeg/euler_o3.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "eqdeg/error.hpp"

namespace eqdeg {

namespace detail {
extern const char *const psi_table_json;
}

namespace {

struct Table {
  std::string text;
  std::vector<std::pair<std::string, std::string>> groups;  // name -> finite
  std::vector<std::pair<std::string, std::string>> units;   // name -> unit label
  std::vector<PsiEntry> entries;
  std::vector<PublishedDegree> degrees;
};

const Table &table()
{
  static const Table t = [] {
    Table t;
    t.text = detail::psi_table_json;
    auto j = nlohmann::ordered_json::parse(t.text);
    for (const auto &g : j.at("groups")) {
      t.groups.emplace_back(g.at("name"), g.at("finite"));
      t.units.emplace_back(g.at("name"), g.at("unit"));
    }
    for (const auto &c : j.at("classes"))
      t.entries.push_back({c.at("group"), c.at("label"), c.at("weyl_dim"),
                           c.at("images").get<std::vector<std::string>>(), c.at("remainder"),
                           c.at("note")});
    for (const auto &d : j.at("degrees")) {
      PublishedDegree p{d.at("name"), d.at("group"), d.at("finite_rep"), {}, d.at("remainder")};
      for (const auto &[label, coeff] : d.at("coefficients").items())
        p.coefficients.emplace_back(label, coeff.get<std::int64_t>());
      t.degrees.push_back(std::move(p));
    }
    return t;
  }();
  return t;
}

const std::string lift_prefix = "O(3) x ";

} // namespace

const std::string &psi_table_text() { return table().text; }
const std::vector<PsiEntry> &psi_table() { return table().entries; }
const std::vector<PublishedDegree> &published_degrees() { return table().degrees; }

const PsiEntry *find_psi(std::string_view group, std::string_view label)
{
  for (const auto &e : table().entries)
    if (e.group == group && e.label == label)
      return &e;
  return nullptr;
}

std::string unit_label(std::string_view group)
{
  for (const auto &[name, unit] : table().units)
    if (name == group)
      return unit;
  throw ConfigError("unknown group " + std::string(group));
}

std::string finite_group_of(std::string_view group)
{
  for (const auto &[name, finite] : table().groups)
    if (name == group)
      return finite;
  throw ConfigError("unknown group " + std::string(group));
}

TruncatedEulerElement TruncatedEulerElement::unit(std::string group)
{
  TruncatedEulerElement e(group);
  e.add_to(unit_label(group), 1);
  return e;
}

std::int64_t TruncatedEulerElement::coeff(std::string_view label) const
{
  for (const auto &[l, c] : terms_)
    if (l == label)
      return c;
  // The unresolved part lives strictly below the listed classes, never at the unit.
  if (remainder_ && label != unit_label(group_))
    throw UnsupportedClassError("coefficient of " + std::string(label) +
                                " lies in the unresolved submaximal part");
  return 0;
}

void TruncatedEulerElement::add_to(const std::string &label, std::int64_t c)
{
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const auto &t) { return t.first == label; });
  if (it == terms_.end()) {
    if (c != 0)
      terms_.emplace_back(label, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0)
    terms_.erase(it);
}

TruncatedEulerElement operator-(const TruncatedEulerElement &a, const TruncatedEulerElement &b)
{
  if (a.group_ != b.group_)
    throw ConfigError("elements over different groups");
  TruncatedEulerElement r = a;
  for (const auto &[l, c] : b.terms_)
    r.add_to(l, -c);
  r.remainder_ = a.remainder_ || b.remainder_;
  return r;
}

std::string TruncatedEulerElement::to_string() const
{
  std::string out;
  for (const auto &[l, c] : terms_) {
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::int64_t m = c < 0 ? -c : c;
    if (m != 1)
      out += std::to_string(m);
    out += "(" + l + ")";
  }
  if (remainder_)
    out += out.empty() ? "..." : " + ...";
  return out.empty() ? "0" : out;
}

bool o3_leq(std::string_view a, std::string_view b, const SubgroupLattice *s4)
{
  if (a == b)
    return true;
  for (const auto &[name, unit] : table().units) {
    if (b == unit)
      return true;
    if (a == unit)
      return false;
  }
  bool a_lift = a.starts_with(lift_prefix), b_lift = b.starts_with(lift_prefix);
  if (a_lift && b_lift) {
    if (!s4)
      throw UnsupportedClassError("comparing lifted classes needs the S4 lattice");
    int ka = s4->require(a.substr(lift_prefix.size()));
    int kb = s4->require(b.substr(lift_prefix.size()));
    return s4->leq(ka, kb);
  }
  auto tabled = [](std::string_view l) {
    return std::any_of(table().entries.begin(), table().entries.end(),
                       [&](const PsiEntry &e) { return e.label == l; });
  };
  if (!a_lift && !b_lift && tabled(a) && tabled(b))
    return false;
  throw UnsupportedClassError("no known order relation between " + std::string(a) + " and " +
                              std::string(b));
}

std::vector<std::string> max_part(const TruncatedEulerElement &e, const SubgroupLattice *s4)
{
  std::vector<std::string> out;
  for (const auto &[a, ca] : e.terms()) {
    bool dominated = std::any_of(e.terms().begin(), e.terms().end(), [&](const auto &t) {
      return t.first != a && o3_leq(a, t.first, s4);
    });
    if (!dominated)
      out.push_back(a);
  }
  return out;
}

FiniteImage psi_restrict(const TruncatedEulerElement &e, const LatticePtr &target)
{
  FiniteImage out{RingElement(target), e.remainder()};
  for (const auto &[label, c] : e.terms()) {
    const PsiEntry *entry = find_psi(e.group(), label);
    if (!entry)
      throw UnsupportedClassError("no restriction known for class " + label + " of " + e.group());
    for (const auto &image : entry->images)
      out.value.add_to(target->require(image), c);
    out.remainder = out.remainder || entry->remainder;
  }
  return out;
}

TruncatedEulerElement lift_s4(const RingElement &a)
{
  const auto &lat = *a.lattice();
  if (lat.group().name() != "S4")
    throw ConfigError("lifting needs an element of A(S4)");
  TruncatedEulerElement out("O(3)xS4");
  std::vector<int> classes;
  for (auto [h, c] : a.coeffs())
    classes.push_back(h);
  for (int h : print_order(lat, classes))
    out.add_to(lift_prefix + lat[std::size_t(h)].name(), a.coeff(h));
  return out;
}

TruncatedEulerElement assemble_published(std::string_view name, const RingElement &finite)
{
  const PublishedDegree *deg = nullptr;
  for (const auto &d : table().degrees)
    if (d.name == name)
      deg = &d;
  if (!deg)
    throw ConfigError("no published degree named " + std::string(name));
  const auto &lat = finite.lattice();
  if (lat->group().name() != finite_group_of(deg->group))
    throw ConfigError("degree " + deg->name + " restricts to " + finite_group_of(deg->group) +
                      ", got an element over " + lat->group().name());

  TruncatedEulerElement out(deg->group);
  for (const auto &[label, c] : deg->coefficients)
    out.add_to(label, c);
  out.set_remainder(deg->remainder);

  std::string unit = unit_label(deg->group);
  std::set<int> images;
  for (const auto &[label, c] : deg->coefficients) {
    const PsiEntry *entry = find_psi(deg->group, label);
    if (!entry)
      throw InternalError("published class " + label + " has no restriction entry");
    for (const auto &image : entry->images) {
      int cls = lat->require(image);
      if (finite.coeff(cls) != c)
        throw InternalError("restriction of " + label + " predicts coefficient " +
                            std::to_string(c) + " at " + image + ", computed " +
                            std::to_string(finite.coeff(cls)));
      if (label != unit)
        images.insert(cls);
    }
  }
  auto maximal = max_part(finite - RingElement::unit(lat));
  if (std::set<int>(maximal.begin(), maximal.end()) != images)
    throw InternalError("images of the published classes differ from the computed maximal classes");
  return out;
}

std::vector<std::string> max_coeff_survival(bool a_is_unit, const TruncatedEulerElement &b,
                                            const SubgroupLattice *s4)
{
  if (!a_is_unit)
    throw DomainError("left factor is not certified invertible");
  return max_part(b, s4);
}

} // namespace eqdeg
