#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsi/permgroup.hpp"

namespace qsi {

struct CatalogEntry {
  std::string id;
  std::size_t degree = 1;
  /// Disjoint-cycle strings with 1-based points.
  std::vector<std::string> generators;
  std::uint64_t expected_order = 1;
  std::string notes;
};

/// A subgroup of a catalog group, plus optionally a linear character given by
/// its values ζ_m^a on the generators.
struct SubgroupDatum {
  std::string id;
  std::string parent;
  std::size_t degree = 1;
  std::vector<std::string> generators;
  std::uint64_t expected_order = 1;
  std::vector<std::pair<std::int64_t, std::uint32_t>> linear_character;
  std::string notes;
};

const std::vector<CatalogEntry>& builtin_entries();

/// Builds and checks the order; throws IntegrityError on mismatch.
PermGroup build_group(const CatalogEntry& e);

struct GeneratorFile {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
};

/// "degree n" then one permutation per line; blank lines and '#' comments ignored.
GeneratorFile parse_generator_file(std::string_view text);
std::string format_generator_file(std::size_t degree, std::span<const Permutation> gens, std::string_view comment = {});
GeneratorFile read_generator_file(const std::filesystem::path& path);

class Catalog {
public:
  /// Reads manifest.json from the directory when present.
  explicit Catalog(std::filesystem::path fixtures = default_fixture_dir());

  /// $QSI_FIXTURES when set, otherwise the source tree's fixtures directory.
  static std::filesystem::path default_fixture_dir();

  const std::filesystem::path& fixture_dir() const noexcept { return dir_; }
  std::vector<std::string> ids() const;
  /// Throws NotFound.
  const CatalogEntry& entry(std::string_view id) const;
  PermGroup load(std::string_view id) const;

  std::vector<std::string> subgroup_ids() const;
  const SubgroupDatum& subgroup(std::string_view id) const;
  PermGroup load_subgroup(std::string_view id) const;

private:
  std::filesystem::path dir_;
  std::vector<CatalogEntry> entries_;
  std::vector<SubgroupDatum> subgroups_;
};

/// Throws IntegrityError unless the generators lie in `parent` and generate a group of the expected order.
PermGroup load_subgroup(const SubgroupDatum& d, const PermGroup& parent);

/// Builtin lookup without fixtures.
PermGroup load(std::string_view id);

} // namespace qsi
