#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "eqdeg/bifurcation.hpp"
#include "eqdeg/error.hpp"
#include "eqdeg/report.hpp"
#include "eqdeg/workspace.hpp"

namespace {

struct Config {
  double g = 0.0;
  double g_tilde = 0.0;
  int kmax = 12;
  int mmax = 20;
  double root_tol = 1e-12;
  double coincidence_tol = 1e-9;
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  bool rebuild = false;
  bool direct = false;
};

std::optional<std::filesystem::path> default_cache_dir()
{
  if (auto env = eqdeg::cache_dir_from_env())
    return env;
  if (const char *xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "eqdeg";
  if (const char *home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "eqdeg";
  return std::nullopt;
}

eqdeg::Workspace make_workspace(const Config &c)
{
  eqdeg::WorkspaceOptions opts;
  if (!c.no_cache)
    opts.cache_dir = c.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(c.cache_dir);
  opts.rebuild = c.rebuild;
  opts.direct_products = c.direct;
  return eqdeg::Workspace(opts);
}

std::vector<eqdeg::SpectralLine> spectrum_lines(const Config &c, const eqdeg::PhysicalParams &p)
{
  eqdeg::SpectrumOptions so;
  so.kmax = c.kmax;
  so.mmax = c.mmax;
  so.root_tol = c.root_tol;
  auto lines = eqdeg::neumann_eigenvalues(so);
  eqdeg::critical_values(p, lines);
  return lines;
}

void emit(const Config &c, const eqdeg::Json &j, std::string (*text)(const eqdeg::Json &))
{
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text(j);
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Equivariant degree computations for a two-species condensate on the unit ball"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;

  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cache-dir", c.cache_dir,
                 "Lattice cache directory (default: $EQDEG_CACHE_DIR, else ~/.cache/eqdeg)");
  app.add_flag("--no-cache", c.no_cache, "Neither read nor write lattice caches");
  app.add_flag("--rebuild", c.rebuild, "Ignore existing cache files");
  app.add_flag("--direct", c.direct, "Enumerate product lattices directly instead of via Goursat");

  auto add_physics = [&](CLI::App *sub) {
    sub->add_option("--g", c.g, "Intra-species coupling")->required();
    sub->add_option("--gtilde", c.g_tilde, "Inter-species coupling")->required();
    sub->add_option("--kmax", c.kmax, "Largest angular index")->check(CLI::Range(0, 12));
    sub->add_option("--mmax", c.mmax, "Radial roots per index")->check(CLI::Range(1, 20));
    sub->add_option("--root-tol", c.root_tol, "Bisection tolerance")
        ->check(CLI::Range(1e-15, 1e-6));
    sub->add_option("--coincidence-tol", c.coincidence_tol, "Relative tolerance for equal s^2")
        ->check(CLI::Range(1e-15, 1e-3));
  };

  auto *spectrum = app.add_subcommand("spectrum", "Neumann spectrum and critical values");
  add_physics(spectrum);

  std::string group, rep;
  auto *basic = app.add_subcommand("basic-degree", "Basic degree of an irreducible representation");
  basic->add_option("--group", group, "S4, S4p or S4pxS4")->required();
  basic->add_option("--rep", rep, "W0..W4 over S4, W3m over S4p, W3mxW4 over S4pxS4")->required();

  auto *subgroups = app.add_subcommand("subgroups", "Conjugacy classes of subgroups");
  subgroups->add_option("--group", group, "Group descriptor, e.g. S4p")->required();

  int k = -1, m = -1;
  std::optional<double> scan_max;
  auto *bif = app.add_subcommand("bifurcate", "Bifurcation index and branch report");
  add_physics(bif);
  auto *ko = bif->add_option("--k", k, "Angular index")->check(CLI::NonNegativeNumber);
  auto *mo = bif->add_option("--m", m, "Radial index")->check(CLI::NonNegativeNumber);
  auto *so = bif->add_option("--scan", scan_max, "Report every critical value below this mu");
  ko->needs(mo);
  mo->needs(ko);
  so->excludes(ko)->excludes(mo);

  app.add_subcommand("psi-table", "Restriction table from O(3) to the finite subgroup");

  try {
    app.parse(argc, argv);
    if (bif->parsed() && !scan_max && k < 0)
      throw CLI::RequiredError("either --k/--m or --scan");
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (spectrum->parsed()) {
      eqdeg::PhysicalParams p(c.g, c.g_tilde);
      emit(c, eqdeg::spectrum_json(p, spectrum_lines(c, p)), eqdeg::spectrum_text);
    } else if (basic->parsed()) {
      auto ws = make_workspace(c);
      const auto &deg = ws.basic_degree(group, rep);
      emit(c, eqdeg::degree_json(group, deg, ws.rep(group, rep).dim), eqdeg::degree_text);
    } else if (subgroups->parsed()) {
      auto ws = make_workspace(c);
      emit(c, eqdeg::lattice_json(*ws.lattice(group)), eqdeg::lattice_text);
    } else if (bif->parsed()) {
      eqdeg::PhysicalParams p(c.g, c.g_tilde);
      auto lines = spectrum_lines(c, p);
      auto ws = make_workspace(c);
      std::vector<eqdeg::BifurcationReport> reports;
      if (scan_max)
        reports = eqdeg::scan(ws, p, *scan_max, lines, c.coincidence_tol);
      else
        reports.push_back(eqdeg::bifurcation_index(ws, p, k, m, lines, c.coincidence_tol));
      emit(c, eqdeg::bifurcation_json(p, reports), eqdeg::bifurcation_text);
    } else {
      emit(c, eqdeg::psi_table_json(), eqdeg::psi_table_text_render);
    }
  } catch (const eqdeg::ConfigError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const eqdeg::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
