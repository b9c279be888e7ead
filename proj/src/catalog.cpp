#include "qsi/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qsi/errors.hpp"

#ifndef QSI_FIXTURE_DIR
#define QSI_FIXTURE_DIR "fixtures"
#endif

namespace qsi {

const std::vector<CatalogEntry>& builtin_entries() {
  static const std::vector<CatalogEntry> entries{
      {"C1", 1, {}, 1, "trivial group"},
      {"C2", 2, {"(1,2)"}, 2, ""},
      {"C3", 3, {"(1,2,3)"}, 3, ""},
      {"C4", 4, {"(1,2,3,4)"}, 4, ""},
      {"V4", 4, {"(1,2)(3,4)", "(1,3)(2,4)"}, 4, "Klein four-group"},
      {"C5", 5, {"(1,2,3,4,5)"}, 5, ""},
      {"C6", 6, {"(1,2,3,4,5,6)"}, 6, ""},
      {"S3", 3, {"(1,2,3)", "(1,2)"}, 6, ""},
      {"D8", 4, {"(1,2,3,4)", "(1,3)"}, 8, "dihedral of order 8"},
      {"Q8", 8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}, 8, "quaternion group, regular action"},
      {"D10", 5, {"(1,2,3,4,5)", "(2,5)(3,4)"}, 10, ""},
      {"A4", 4, {"(1,2,3)", "(1,2)(3,4)"}, 12, ""},
      {"D12", 6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"}, 12, ""},
      {"F20", 5, {"(1,2,3,4,5)", "(2,3,5,4)"}, 20, "Frobenius group of order 20"},
      {"S4", 4, {"(1,2,3,4)", "(1,2)"}, 24, ""},
      {"SL23", 8, {"(3,4,5)(6,8,7)", "(1,6,2,3)(4,7,8,5)"}, 24, "SL(2,3)"},
      {"A5", 5, {"(1,2,3)", "(1,2,3,4,5)"}, 60, ""},
      {"PSL25", 6, {"(2,4,3,5,6)", "(1,6)(2,5)"}, 60, "PSL(2,5) on the projective line"},
      {"S5", 5, {"(1,2,3,4,5)", "(1,2)"}, 120, ""},
      {"PSL27", 8, {"(2,5,6,3,4,7,8)", "(1,8)(2,7)(3,4)(5,6)"}, 168, "PSL(2,7) on the projective line"},
      {"PSL32", 7, {"(4,6)(5,7)", "(1,4,2)(3,5,6)"}, 168, "PSL(3,2) on the points of the Fano plane"},
      {"A6", 6, {"(1,2,3)", "(2,3,4,5,6)"}, 360, ""},
      {"PSL29", 10, {"(1,2)(3,6)(4,5)(9,10)", "(1,2,7,6,4)(3,5,8,10,9)"}, 360, "PSL(2,9) on the projective line"},
      {"PSL211", 12, {"(2,7,5,4,10,3,9,8,6,11,12)", "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"}, 660,
       "PSL(2,11) on the projective line"},
      {"A7", 7, {"(1,2,3)", "(1,2,3,4,5,6,7)"}, 2520, ""},
      {"M11", 11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"}, 7920, "Mathieu group"},
      {"A8", 8, {"(1,2,3)", "(2,3,4,5,6,7,8)"}, 20160, ""},
      {"PSU42", 27,
       {"(1,9,18,19,8,22,10,12,24,4,13,11)(2,16,23,17,27,25,14,7,15,3,5,20)(6,26,21)",
        "(1,27,20,7,2,12,23,15,10)(3,6,16,26,11,4,17,22,24)(5,8,18,25,21,14,19,13,9)"},
       25920, "PSU(4,2) = PSp(4,3) on the 27 lines of a cubic surface"},
      {"PSp43", 27,
       {"(1,9,18,19,8,22,10,12,24,4,13,11)(2,16,23,17,27,25,14,7,15,3,5,20)(6,26,21)",
        "(1,27,20,7,2,12,23,15,10)(3,6,16,26,11,4,17,22,24)(5,8,18,25,21,14,19,13,9)"},
       25920, "same permutation group as PSU42"},
      {"A9", 9, {"(1,2,3)", "(1,2,3,4,5,6,7,8,9)"}, 181440, ""},
  };
  return entries;
}

PermGroup build_group(const CatalogEntry& e) {
  std::vector<Permutation> gens;
  for (const auto& s : e.generators) gens.push_back(Permutation::from_cycles(s, e.degree));
  PermGroup g = PermGroup::generate(e.degree, std::move(gens));
  if (g.order() != e.expected_order)
    throw IntegrityError(e.id + ": generated order " + g.order().get_str() + ", expected " +
                         std::to_string(e.expected_order));
  return g;
}

GeneratorFile parse_generator_file(std::string_view text) {
  GeneratorFile out;
  bool have_degree = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (!have_degree) {
      std::istringstream ls(line);
      std::string word;
      long long n = 0;
      if (!(ls >> word >> n) || word != "degree" || n < 1 || !(ls >> std::ws).eof())
        throw MalformedInput("line " + std::to_string(lineno) + ": expected 'degree n'");
      out.degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    try {
      out.generators.push_back(Permutation::from_cycles(line, out.degree));
    } catch (const MalformedInput& e) {
      throw MalformedInput("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_degree) throw MalformedInput("generator file has no 'degree' line");
  return out;
}

std::string format_generator_file(std::size_t degree, std::span<const Permutation> gens, std::string_view comment) {
  std::string out;
  if (!comment.empty()) out += "# " + std::string(comment) + "\n";
  out += "degree " + std::to_string(degree) + "\n";
  for (const auto& g : gens) out += g.to_cycle_string() + "\n";
  return out;
}

GeneratorFile read_generator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("cannot open generator file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_generator_file(ss.str());
}

std::filesystem::path Catalog::default_fixture_dir() {
  if (const char* env = std::getenv("QSI_FIXTURES"); env && *env) return env;
  return QSI_FIXTURE_DIR;
}

Catalog::Catalog(std::filesystem::path fixtures) : dir_(std::move(fixtures)), entries_(builtin_entries()) {
  const auto manifest = dir_ / "manifest.json";
  if (!std::filesystem::exists(manifest)) return;
  std::ifstream in(manifest);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput("manifest " + manifest.string() + ": " + e.what());
  }
  auto cycles = [](const GeneratorFile& f) {
    std::vector<std::string> out;
    for (const auto& g : f.generators) out.push_back(g.to_cycle_string());
    return out;
  };
  try {
    for (const auto& g : j.value("groups", nlohmann::json::array())) {
      CatalogEntry e;
      e.id = g.at("id").get<std::string>();
      auto f = read_generator_file(dir_ / g.at("file").get<std::string>());
      e.degree = f.degree;
      e.generators = cycles(f);
      e.expected_order = g.at("expected_order").get<std::uint64_t>();
      e.notes = g.value("notes", "");
      auto it = std::find_if(entries_.begin(), entries_.end(), [&](const CatalogEntry& x) { return x.id == e.id; });
      if (it == entries_.end()) {
        entries_.push_back(std::move(e));
      } else if (it->expected_order != e.expected_order) {
        throw IntegrityError("manifest order for " + e.id + " disagrees with the builtin entry");
      }
    }
    for (const auto& s : j.value("subgroups", nlohmann::json::array())) {
      SubgroupDatum d;
      d.id = s.at("id").get<std::string>();
      d.parent = s.at("parent").get<std::string>();
      auto f = read_generator_file(dir_ / s.at("file").get<std::string>());
      d.degree = f.degree;
      d.generators = cycles(f);
      d.expected_order = s.at("expected_order").get<std::uint64_t>();
      for (const auto& v : s.value("linear_character", nlohmann::json::array()))
        d.linear_character.emplace_back(v.at(0).get<std::int64_t>(), v.at(1).get<std::uint32_t>());
      d.notes = s.value("notes", "");
      subgroups_.push_back(std::move(d));
    }
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput("manifest " + manifest.string() + ": " + e.what());
  }
}

std::vector<std::string> Catalog::ids() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.id);
  return out;
}

const CatalogEntry& Catalog::entry(std::string_view id) const {
  for (const auto& e : entries_)
    if (e.id == id) return e;
  throw NotFound("unknown group id '" + std::string(id) + "'");
}

PermGroup Catalog::load(std::string_view id) const { return build_group(entry(id)); }

std::vector<std::string> Catalog::subgroup_ids() const {
  std::vector<std::string> out;
  for (const auto& s : subgroups_) out.push_back(s.id);
  return out;
}

const SubgroupDatum& Catalog::subgroup(std::string_view id) const {
  for (const auto& s : subgroups_)
    if (s.id == id) return s;
  throw NotFound("unknown subgroup id '" + std::string(id) + "'");
}

PermGroup Catalog::load_subgroup(std::string_view id) const {
  const SubgroupDatum& d = subgroup(id);
  return qsi::load_subgroup(d, load(d.parent));
}

PermGroup load_subgroup(const SubgroupDatum& d, const PermGroup& parent) {
  if (d.degree != parent.degree()) throw IntegrityError(d.id + ": degree differs from the parent group");
  std::vector<Permutation> gens;
  for (const auto& s : d.generators) {
    Permutation p = Permutation::from_cycles(s, d.degree);
    if (!parent.contains(p)) throw IntegrityError(d.id + ": generator " + s + " is not in " + d.parent);
    gens.push_back(std::move(p));
  }
  PermGroup u = PermGroup::generate(d.degree, std::move(gens));
  if (u.order() != d.expected_order)
    throw IntegrityError(d.id + ": generated order " + u.order().get_str() + ", expected " +
                         std::to_string(d.expected_order));
  return u;
}

PermGroup load(std::string_view id) {
  for (const auto& e : builtin_entries())
    if (e.id == id) return build_group(e);
  throw NotFound("unknown group id '" + std::string(id) + "'");
}

} // namespace qsi
