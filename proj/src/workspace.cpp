#include "eqdeg/workspace.hpp"

#include <cstdlib>
#include <fstream>

#include "eqdeg/error.hpp"
#include "eqdeg/goursat.hpp"
#include "eqdeg/labels.hpp"

namespace eqdeg {

namespace {

std::pair<std::string, std::string> split_product(std::string_view d)
{
  auto pos = d.rfind('x');
  if (pos == std::string_view::npos || pos == 0 || pos + 1 == d.size())
    return {};
  return {std::string(d.substr(0, pos)), std::string(d.substr(pos + 1))};
}

} // namespace

std::optional<std::filesystem::path> cache_dir_from_env()
{
  if (const char *dir = std::getenv("EQDEG_CACHE_DIR"); dir && *dir)
    return std::filesystem::path(dir);
  return std::nullopt;
}

Workspace::Workspace(WorkspaceOptions options) : options_(std::move(options)) {}

GroupPtr Workspace::group(std::string_view descriptor)
{
  std::lock_guard lock(mutex_);
  if (auto it = groups_.find(descriptor); it != groups_.end())
    return it->second;
  GroupPtr g;
  if (auto [a, b] = split_product(descriptor); !a.empty())
    g = std::make_shared<const Group>(Group::direct_product(group(a), group(b)));
  else
    g = build_group(descriptor);
  groups_.emplace(std::string(descriptor), g);
  return g;
}

std::optional<std::filesystem::path> Workspace::cache_file(std::string_view descriptor) const
{
  if (!options_.cache_dir)
    return std::nullopt;
  return *options_.cache_dir / (std::string(descriptor) + ".lattice");
}

bool Workspace::loaded_from_cache(std::string_view descriptor) const
{
  std::lock_guard lock(mutex_);
  auto it = from_cache_.find(descriptor);
  return it != from_cache_.end() && it->second;
}

LatticePtr Workspace::lattice(std::string_view descriptor)
{
  std::lock_guard lock(mutex_);
  if (auto it = lattices_.find(descriptor); it != lattices_.end())
    return it->second;
  GroupPtr g = group(descriptor);
  auto [a, b] = split_product(descriptor);
  LatticePtr first, second;
  if (!a.empty()) {
    first = lattice(a);
    second = lattice(b);
  }

  std::optional<SubgroupLattice> lat;
  bool cached = false;
  auto file = cache_file(descriptor);
  if (file && !options_.rebuild) {
    std::ifstream in(*file);
    if (in) {
      lat = SubgroupLattice::load(g, in, code_version);
      cached = lat.has_value();
    }
  }
  if (!lat) {
    if (first && !options_.direct_products)
      lat = goursat_enumerate(g, *first, *second);
    else
      lat = SubgroupLattice::enumerate(g);
    if (file) {
      std::filesystem::create_directories(file->parent_path());
      auto tmp = *file;
      tmp += ".tmp";
      {
        std::ofstream out(tmp);
        lat->save(out, code_version);
        if (!out)
          throw ConfigError("cannot write lattice cache " + tmp.string());
      }
      std::filesystem::rename(tmp, *file);
    }
  }
  if (first)
    label_product(*lat, *first, *second);
  else
    apply_labels(*lat);

  auto ptr = std::make_shared<const SubgroupLattice>(std::move(*lat));
  lattices_.emplace(std::string(descriptor), ptr);
  from_cache_[std::string(descriptor)] = cached;
  return ptr;
}

RepHandle Workspace::rep(std::string_view group_name, std::string_view name)
{
  GroupPtr g = group(group_name);
  if (g->is_product() && name != "W0") {
    auto [ga, gb] = split_product(group_name);
    auto [ra, rb] = split_product(name);
    if (ra.empty())
      throw ConfigError("representation of " + std::string(group_name) +
                        " must be written AxB, e.g. W3mxW4");
    return tensor(g, rep(ga, ra), rep(gb, rb));
  }
  return make_rep(g, name);
}

const BasicDegree &Workspace::basic_degree(std::string_view group_name, std::string_view rep_name)
{
  std::lock_guard lock(mutex_);
  std::string key = std::string(group_name) + "/" + std::string(rep_name);
  if (auto it = degrees_.find(key); it != degrees_.end())
    return *it->second;
  auto r = rep(group_name, rep_name);
  auto deg = std::make_unique<BasicDegree>(eqdeg::basic_degree(r, lattice(group_name)));
  return *degrees_.emplace(key, std::move(deg)).first->second;
}

} // namespace eqdeg
