#include "qsi/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "qsi/errors.hpp"
#include "qsi/numtheory.hpp"
#include "qsi/repro_cases.hpp"
#include "qsi/report.hpp"

namespace qsi {

namespace {

struct RunConfig {
  SearchBounds bounds;
  bool json = false;
  std::string fixtures;
};

struct Loaded {
  std::string name;
  PermGroup group;
};

Loaded load_group(const std::string& arg, const Catalog& cat) {
  std::filesystem::path p(arg);
  if (p.extension() == ".gens" || std::filesystem::is_regular_file(p))
    return Loaded{p.stem().string(), [&] {
                    GeneratorFile f = read_generator_file(p);
                    return PermGroup::generate(f.degree, std::move(f.generators));
                  }()};
  return Loaded{arg, cat.load(arg)};
}

mpz_class parse_integer(const std::string& s, const char* what) {
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw MalformedInput(std::string(what) + " must be an integer, got '" + s + "'");
  return v;
}

unsigned parse_small(const std::string& s, const char* what) {
  mpz_class v = parse_integer(s, what);
  if (v < 1 || v > 100000) throw DomainError(std::string(what) + " out of range: " + s);
  return static_cast<unsigned>(v.get_ui());
}

LieFamily parse_family_or_throw(const std::string& s) {
  auto f = parse_family(s);
  if (!f) throw NotFound("unknown family '" + s + "'");
  return *f;
}

/// "D" or "deg:D" selects every irreducible of degree D; "idx:I" selects X_I (1-based).
std::vector<std::size_t> select_characters(const std::string& spec, const CharacterTable& t) {
  std::vector<std::size_t> out;
  if (spec.rfind("idx:", 0) == 0) {
    unsigned i = parse_small(spec.substr(4), "character index");
    if (i > t.size()) throw NotFound("no irreducible X" + std::to_string(i) + " (table has " + std::to_string(t.size()) + ")");
    out.push_back(i - 1);
    return out;
  }
  std::string d = spec.rfind("deg:", 0) == 0 ? spec.substr(4) : spec;
  std::uint64_t degree = parse_small(d, "character degree");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i].degree() == degree) out.push_back(i);
  if (out.empty()) throw NotFound("no irreducible of degree " + d);
  return out;
}

int cmd_table(const RunConfig& cfg, const std::string& group, std::ostream& out) {
  Catalog cat = cfg.fixtures.empty() ? Catalog() : Catalog(cfg.fixtures);
  Loaded g = load_group(group, cat);
  CharacterTable t = character_table(g.group, cfg.bounds.element_bound);
  if (cfg.json)
    out << table_json(g.name, t).dump(2) << "\n";
  else
    out << table_text(g.name, t);
  return exit_ok;
}

int cmd_qsi(const RunConfig& cfg, const std::string& group, const std::string& char_spec, bool monomial,
            std::ostream& out) {
  Catalog cat = cfg.fixtures.empty() ? Catalog() : Catalog(cfg.fixtures);
  Loaded g = load_group(group, cat);
  QsiContext ctx(g.group, cfg.bounds);
  GroupVerdict gv;
  if (char_spec.empty()) {
    gv = monomial ? decide_monomial_group(ctx) : decide_qsi_group(ctx);
  } else {
    gv.monomial_mode = monomial;
    gv.solvable = ctx.solvable();
    for (std::size_t i : select_characters(char_spec, ctx.table()))
      gv.verdicts.push_back(monomial ? decide_monomial_character(ctx, i) : decide_qsi_character(ctx, i));
  }
  bool undecided = std::any_of(gv.verdicts.begin(), gv.verdicts.end(),
                               [](const QsiVerdict& v) { return v.status == QsiStatus::undecided_capacity; });
  if (cfg.json) {
    out << group_verdict_json(g.name, gv).dump(2) << "\n";
  } else if (char_spec.empty()) {
    out << group_verdict_text(g.name, gv);
  } else {
    for (const auto& v : gv.verdicts) out << verdict_text(v);
  }
  return undecided ? exit_capacity : exit_ok;
}

int cmd_order(const RunConfig& cfg, const std::string& family, const std::string& n, const std::string& q,
              std::ostream& out) {
  LieFamily f = parse_family_or_throw(family);
  unsigned nn = parse_small(n, "n");
  mpz_class qq = parse_integer(q, "q");
  LieOrder o = group_order(f, nn, qq);
  if (cfg.json) {
    Json j{{"command", "order"},
           {"family", std::string(family_name(f))},
           {"n", nn},
           {"q", qq.get_str()},
           {"group", group_label(f, nn, qq)},
           {"order", o.simple.get_str()},
           {"simply_connected_order", o.simply_connected.get_str()},
           {"center", o.center.get_str()},
           {"characteristic", o.p.get_str()},
           {"simple", o.is_simple}};
    out << j.dump(2) << "\n";
  } else {
    out << o.simple.get_str() << "\n";
    if (!o.is_simple) out << group_label(f, nn, qq) << " is not simple\n";
  }
  return exit_ok;
}

int cmd_zsigmondy(const RunConfig& cfg, const std::string& d, const std::string& n, std::ostream& out) {
  mpz_class dd = parse_integer(d, "d");
  unsigned nn = parse_small(n, "n");
  if (dd < 2) throw DomainError("d must be at least 2");
  auto prime = zsigmondy(dd, nn);
  if (cfg.json) {
    Json all = Json::array();
    for (const auto& p : primitive_prime_divisors(dd, nn)) all.push_back(p.get_str());
    out << Json{{"command", "zsigmondy"},
                {"d", dd.get_str()},
                {"n", nn},
                {"prime", prime ? Json(prime->get_str()) : Json(nullptr)},
                {"exception", !prime.has_value()},
                {"primitive_prime_divisors", all}}
               .dump(2)
        << "\n";
  } else {
    out << (prime ? prime->get_str() : std::string("none (exception)")) << "\n";
  }
  return exit_ok;
}

int cmd_eliminate(const RunConfig& cfg, const std::string& family, const std::string& n, const std::string& q,
                  std::ostream& out) {
  LieFamily f = parse_family_or_throw(family);
  EliminationReport r = eliminate(f, parse_small(n, "n"), parse_integer(q, "q"));
  if (cfg.json)
    out << elimination_json(r).dump(2) << "\n";
  else
    out << elimination_text(r);
  return exit_ok;
}

int cmd_verify(const RunConfig& cfg, const std::string& id, std::ostream& out) {
  Catalog cat = cfg.fixtures.empty() ? Catalog() : Catalog(cfg.fixtures);
  ReproCaseResult r = run_repro_case(id, cat, cfg.bounds);
  if (cfg.json) {
    Json a = Json::array();
    for (const auto& x : r.assertions) a.push_back(Json{{"name", x.name}, {"passed", x.passed}, {"detail", x.detail}});
    out << Json{{"command", "verify-paper"}, {"case", r.id}, {"passed", r.passed()}, {"assertions", a}}.dump(2) << "\n";
  } else {
    for (const auto& x : r.assertions)
      out << (x.passed ? "PASS " : "FAIL ") << x.name << (x.detail.empty() ? "" : " (" + x.detail + ")") << "\n";
    out << r.id << ": " << (r.passed() ? "all assertions passed" : "FAILED") << "\n";
  }
  return r.passed() ? exit_ok : exit_failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi solvably induced character analysis", "qsitool"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::uint64_t max_order = cfg.bounds.subgroup_bound;
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_option("--max-group-order", max_order, "Largest group whose subgroup lattice is enumerated")
      ->check(CLI::PositiveNumber);
  bool no_prefilters = false;
  app.add_flag("--no-prefilters", no_prefilters, "Disable the necessary-condition prefilters");
  app.add_option("--fixtures", cfg.fixtures, "Fixture directory");

  std::string group, char_spec, family, n, q, d, case_id;
  bool monomial = false;
  auto* table = app.add_subcommand("table", "Character table of a group");
  table->add_option("group", group, "Catalog id or generator file")->required();
  auto* qsi = app.add_subcommand("qsi", "Decide QSI (or monomiality) for irreducible characters");
  qsi->add_option("group", group, "Catalog id or generator file")->required();
  qsi->add_option("--char", char_spec, "Degree D, deg:D, or idx:I (1-based)");
  qsi->add_flag("--monomial", monomial, "Require a linear inducing character");
  auto* order = app.add_subcommand("order", "Order of a simple group of Lie type");
  order->add_option("family", family)->required();
  order->add_option("n", n)->required();
  order->add_option("q", q)->required();
  auto* zsig = app.add_subcommand("zsigmondy", "Smallest primitive prime divisor of d^n - 1");
  zsig->add_option("d", d)->required();
  zsig->add_option("n", n)->required();
  auto* elim = app.add_subcommand("eliminate", "Overgroup elimination report");
  elim->add_option("family", family)->required();
  elim->add_option("n", n)->required();
  elim->add_option("q", q)->required();
  auto* verify = app.add_subcommand("verify-paper", "Run a named reproduction case");
  verify->add_option("case", case_id)->required()->check(CLI::IsMember(repro_case_ids()));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }
  cfg.bounds.subgroup_bound = max_order;
  cfg.bounds.prefilters = !no_prefilters;

  try {
    if (*table) return cmd_table(cfg, group, out);
    if (*qsi) return cmd_qsi(cfg, group, char_spec, monomial, out);
    if (*order) return cmd_order(cfg, family, n, q, out);
    if (*zsig) return cmd_zsigmondy(cfg, d, n, out);
    if (*elim) return cmd_eliminate(cfg, family, n, q, out);
    if (*verify) return cmd_verify(cfg, case_id, out);
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return exit_capacity;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const UnsupportedCase& e) {
    err << "unsupported: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}

} // namespace qsi
