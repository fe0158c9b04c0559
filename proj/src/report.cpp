#include "eqdeg/report.hpp"

#include <cstdio>
#include <sstream>

namespace eqdeg {

namespace {

Json header(const char *kind)
{
  Json j;
  j["schema"] = std::string("eqdeg.") + kind;
  j["version"] = report_schema_version;
  return j;
}

Json params_json(const PhysicalParams &p)
{
  return Json{{"g", p.g}, {"gtilde", p.g_tilde}};
}

Json euler_json(const TruncatedEulerElement &e)
{
  Json terms = Json::array();
  for (const auto &[label, c] : e.terms())
    terms.push_back(Json{{"class", label}, {"coeff", c}});
  return Json{{"group", e.group()},
              {"expression", e.to_string()},
              {"terms", terms},
              {"remainder", e.remainder()}};
}

std::string fmt(const char *f, double x)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

} // namespace

Json spectrum_json(const PhysicalParams &p, const std::vector<SpectralLine> &lines)
{
  auto simple = simplicity_report(lines);
  Json j = header("spectrum");
  j["params"] = params_json(p);
  Json arr = Json::array();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto &l = lines[i];
    arr.push_back(Json{{"k", l.k},
                       {"m", l.m},
                       {"s", l.s},
                       {"s2", l.s2()},
                       {"mult", l.mult},
                       {"mu_crit", l.mu_crit},
                       {"residual", l.residual},
                       {"simple", bool(simple.simple[i])}});
  }
  j["lines"] = arr;
  return j;
}

Json degree_json(const std::string &group, const BasicDegree &deg, int dim)
{
  const auto &lat = *deg.value.lattice();
  Json j = header("basic-degree");
  j["group"] = group;
  j["rep"] = deg.rep;
  j["dim"] = dim;
  j["expression"] = deg.value.to_string();
  Json terms = Json::array();
  std::vector<int> support;
  for (const auto &[h, c] : deg.value.coeffs())
    support.push_back(h);
  for (int h : print_order(lat, support))
    terms.push_back(Json{{"class", lat[std::size_t(h)].name()},
                         {"order", lat[std::size_t(h)].order()},
                         {"coeff", deg.value.coeff(h)}});
  j["terms"] = terms;
  j["orbit_types"] = deg.orbit_types.classes.size();
  return j;
}

Json lattice_json(const SubgroupLattice &lattice)
{
  Json j = header("subgroups");
  j["group"] = lattice.group().name();
  j["order"] = lattice.group().order();
  Json rows = Json::array();
  for (const auto &c : lattice.classes()) {
    int n = lattice.class_of(c.normalizer.members());
    rows.push_back(Json{{"label", c.name()},
                        {"order", c.order()},
                        {"class_size", c.class_size},
                        {"normalizer", n >= 0 ? lattice[std::size_t(n)].name() : std::string("?")},
                        {"normalizer_order", c.normalizer.order()},
                        {"weyl_order", c.weyl_order}});
  }
  j["classes"] = rows;
  return j;
}

Json bifurcation_json(const PhysicalParams &p, const std::vector<BifurcationReport> &reports)
{
  Json j = header("bifurcation");
  j["params"] = params_json(p);
  Json arr = Json::array();
  for (const auto &r : reports) {
    Json factors = Json::array();
    for (auto [k, m] : r.unit_factors)
      factors.push_back(Json{{"k", k}, {"m", m}});
    Json coincidence = Json::array();
    for (auto [k, m] : r.coincidence)
      coincidence.push_back(Json{{"k", k}, {"m", m}});
    Json branches = Json::array();
    for (const auto &b : r.branches)
      branches.push_back(Json{{"orbit_type", b.orbit_type}, {"guarantee", b.guarantee}});
    arr.push_back(Json{{"k", r.k},
                       {"m", r.m},
                       {"s", r.s},
                       {"mu_crit", r.mu_crit},
                       {"kernel_dim", r.kernel_dim},
                       {"simple", r.simple},
                       {"a", Json{{"certified_unit", true}, {"factors", factors}}},
                       {"coincidence", coincidence},
                       {"b", r.b ? euler_json(*r.b) : Json(nullptr)},
                       {"branches", branches},
                       {"note", r.note}});
  }
  j["reports"] = arr;
  return j;
}

Json psi_table_json()
{
  Json j = header("psi-table");
  Json rows = Json::array();
  for (const auto &e : psi_table())
    rows.push_back(Json{{"group", e.group},
                        {"class", e.label},
                        {"weyl_dim", e.weyl_dim},
                        {"images", e.images},
                        {"remainder", e.remainder}});
  j["classes"] = rows;
  Json degs = Json::array();
  for (const auto &d : published_degrees()) {
    Json terms = Json::array();
    for (const auto &[label, c] : d.coefficients)
      terms.push_back(Json{{"class", label}, {"coeff", c}});
    degs.push_back(Json{{"name", d.name},
                        {"group", d.group},
                        {"finite_rep", d.finite_rep},
                        {"terms", terms},
                        {"remainder", d.remainder}});
  }
  j["degrees"] = degs;
  return j;
}

std::string spectrum_text(const Json &j)
{
  std::ostringstream out;
  out << "  k   m                   s                 s^2              mu_km  mult  simple\n";
  for (const auto &l : j["lines"]) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%3d %3d %19.15f %19.12f %18.10f %5d  %s\n", l["k"].get<int>(),
                  l["m"].get<int>(), l["s"].get<double>(), l["s2"].get<double>(),
                  l["mu_crit"].get<double>(), l["mult"].get<int>(),
                  l["simple"].get<bool>() ? "yes" : "no");
    out << buf;
  }
  return out.str();
}

std::string degree_text(const Json &j)
{
  return "deg " + j["rep"].get<std::string>() + " over " + j["group"].get<std::string>() + " = " +
         j["expression"].get<std::string>() + "\n";
}

std::string lattice_text(const Json &j)
{
  std::ostringstream out;
  out << j["group"].get<std::string>() << ": " << j["classes"].size() << " classes of subgroups\n";
  for (const auto &c : j["classes"]) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-32s |H|=%-5zu #(H)=%-4zu N=%-32s W=%zu\n",
                  c["label"].get<std::string>().c_str(), c["order"].get<std::size_t>(),
                  c["class_size"].get<std::size_t>(), c["normalizer"].get<std::string>().c_str(),
                  c["weyl_order"].get<std::size_t>());
    out << buf;
  }
  return out.str();
}

std::string bifurcation_text(const Json &j)
{
  std::ostringstream out;
  if (j["reports"].empty())
    out << "no critical values below the requested bound\n";
  for (const auto &r : j["reports"]) {
    out << "(k, m) = (" << r["k"].get<int>() << ", " << r["m"].get<int>() << ")  s = "
        << fmt("%.12f", r["s"].get<double>()) << "  mu = " << fmt("%.10f", r["mu_crit"].get<double>())
        << "  kernel dim " << r["kernel_dim"].get<int>()
        << (r["simple"].get<bool>() ? "  simple" : "  not simple") << "\n";
    out << "  unit factor: " << r["a"]["factors"].size() << " basic degree(s)\n";
    if (!r["b"].is_null())
      out << "  b = " << r["b"]["expression"].get<std::string>() << "\n";
    for (const auto &b : r["branches"])
      out << "  branch " << b["orbit_type"].get<std::string>() << " ["
          << b["guarantee"].get<std::string>() << "]\n";
    out << "  " << r["note"].get<std::string>() << "\n";
  }
  return out.str();
}

std::string psi_table_text_render(const Json &j)
{
  std::ostringstream out;
  for (const auto &c : j["classes"]) {
    out << c["group"].get<std::string>() << "  " << c["class"].get<std::string>() << " -> ";
    bool first = true;
    for (const auto &im : c["images"]) {
      out << (first ? "" : ", ") << im.get<std::string>();
      first = false;
    }
    if (c["remainder"].get<bool>())
      out << "  (+ submaximal remainder)";
    out << "\n";
  }
  for (const auto &d : j["degrees"]) {
    out << "deg " << d["name"].get<std::string>() << ":";
    for (const auto &t : d["terms"])
      out << " " << t["coeff"].get<long>() << "*(" << t["class"].get<std::string>() << ")";
    if (d["remainder"].get<bool>())
      out << " + ...";
    out << "\n";
  }
  return out.str();
}

} // namespace eqdeg
