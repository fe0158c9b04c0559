#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "eqdeg/basicdeg.hpp"
#include "eqdeg/euler_o3.hpp"

namespace eqdeg {

/// Bumped whenever enumeration or canonical forms change; stale caches are
/// rebuilt.
inline constexpr std::string_view code_version = "eqdeg-lattice-1";

struct WorkspaceOptions {
  std::optional<std::filesystem::path> cache_dir;
  bool rebuild = false;          ///< ignore existing cache files
  bool direct_products = false;  ///< enumerate product lattices directly instead of via Goursat
};

/// Lazily built groups, labelled lattices, representations and basic
/// degrees, with an optional on-disk lattice cache.
class Workspace {
public:
  explicit Workspace(WorkspaceOptions options = {});

  GroupPtr group(std::string_view descriptor);
  LatticePtr lattice(std::string_view descriptor);
  /// "W4" over S4, "W3m" over S4p, "W3mxW4" over S4pxS4, and the other
  /// names accepted by make_rep; product names are split at the last 'x'.
  RepHandle rep(std::string_view group, std::string_view name);
  const BasicDegree &basic_degree(std::string_view group, std::string_view rep);

  /// Whether the last lattice() call for this group was served from cache.
  bool loaded_from_cache(std::string_view descriptor) const;

private:
  std::optional<std::filesystem::path> cache_file(std::string_view descriptor) const;

  WorkspaceOptions options_;
  mutable std::recursive_mutex mutex_;
  std::map<std::string, GroupPtr, std::less<>> groups_;
  std::map<std::string, LatticePtr, std::less<>> lattices_;
  std::map<std::string, bool, std::less<>> from_cache_;
  std::map<std::string, std::unique_ptr<BasicDegree>, std::less<>> degrees_;
};

/// Cache directory from EQDEG_CACHE_DIR, if set.
std::optional<std::filesystem::path> cache_dir_from_env();

} // namespace eqdeg
