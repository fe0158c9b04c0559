#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "eqdeg/bifurcation.hpp"

namespace eqdeg {

using Json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

Json spectrum_json(const PhysicalParams &p, const std::vector<SpectralLine> &lines);
Json degree_json(const std::string &group, const BasicDegree &deg, int dim);
Json lattice_json(const SubgroupLattice &lattice);
Json bifurcation_json(const PhysicalParams &p, const std::vector<BifurcationReport> &reports);
Json psi_table_json();

std::string spectrum_text(const Json &j);
std::string degree_text(const Json &j);
std::string lattice_text(const Json &j);
std::string bifurcation_text(const Json &j);
std::string psi_table_text_render(const Json &j);

} // namespace eqdeg
