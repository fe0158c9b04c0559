#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqdeg/spectrum.hpp"
#include "eqdeg/workspace.hpp"

namespace eqdeg {

struct Branch {
  std::string orbit_type;
  std::string guarantee;  ///< "exact-maximal", "at-least" or "qualitative"
};

struct BifurcationReport {
  int k = 0;
  int m = 0;
  double s = 0.0;
  double mu_crit = 0.0;
  int kernel_dim = 0;  ///< 3(2k+1)
  bool simple = true;
  /// (j, n) with s_jn < s_km: the invertible factor is the product of the
  /// basic degrees of V_j (x) W4 over these indices.
  std::vector<std::pair<int, int>> unit_factors;
  /// (j, n) with s_jn = s_km, including (k, m).
  std::vector<std::pair<int, int>> coincidence;
  /// (G) minus the product over the coincidence set, when it is known.
  std::optional<TruncatedEulerElement> b;
  std::vector<Branch> branches;
  std::string note;
};

/// Index at mu_km and the branches it guarantees. (0,0) is rejected.
BifurcationReport bifurcation_index(Workspace &ws, const PhysicalParams &p, int k, int m,
                                    const std::vector<SpectralLine> &lines,
                                    double rel_tol = 1e-9);

/// True when no orbit type can lie above two different listed classes,
/// using the known overgroup families of the k = 1 branch classes.
bool branch_distinctness_check(const std::vector<std::string> &classes);

/// Reports for every critical value with 0 < mu_km < mu_max, ordered by mu.
std::vector<BifurcationReport> scan(Workspace &ws, const PhysicalParams &p, double mu_max,
                                    const std::vector<SpectralLine> &lines,
                                    double rel_tol = 1e-9);

} // namespace eqdeg
