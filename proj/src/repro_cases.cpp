#include "qsi/repro_cases.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "qsi/errors.hpp"

namespace qsi {

namespace {

class Recorder {
public:
  explicit Recorder(std::string id) { r_.id = std::move(id); }
  bool check(std::string name, bool ok, std::string detail = {}) {
    r_.assertions.push_back(CaseAssertion{std::move(name), ok, std::move(detail)});
    return ok;
  }
  ReproCaseResult done() { return std::move(r_); }

private:
  ReproCaseResult r_;
};

std::vector<std::size_t> indices_of_degree(const CharacterTable& t, std::uint64_t d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i].degree() == d) out.push_back(i);
  return out;
}

ReproCaseResult a5_not_qsi(const Catalog& cat, SearchBounds b) {
  Recorder rec("a5-not-qsi");
  QsiContext ctx(cat.load("A5"), b);
  const auto& subs = ctx.subgroups();
  rec.check("A5 has 9 subgroup classes", subs.size() == 9, std::to_string(subs.size()));
  bool no_proper_15 = std::none_of(subs.begin(), subs.end(),
                                   [](const SubgroupClass& s) { return s.order % 15 == 0 && s.order != 60; });
  rec.check("no proper subgroup has order divisible by 15", no_proper_15);

  GroupVerdict gv = decide_qsi_group(ctx);
  auto four = indices_of_degree(ctx.table(), 4);
  if (rec.check("a unique degree-4 irreducible", four.size() == 1)) {
    const QsiVerdict& v = gv.verdicts[four[0]];
    rec.check("degree-4 character refuted exhaustively", v.status == QsiStatus::refuted_exhaustive,
              std::string(to_string(v.status)));
    std::vector<bool> seen(subs.size(), false);
    for (const auto& e : v.pruning_log)
      if (e.subgroup_class < seen.size()) seen[e.subgroup_class] = true;
    rec.check("pruning log covers every subgroup class", std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }),
              std::to_string(v.pruning_log.size()) + " entries");
  }
  rec.check("A5 is not QSI", gv.holds.has_value() && !*gv.holds);
  return rec.done();
}

ReproCaseResult psl27_steinberg_monomial(const Catalog& cat, SearchBounds b) {
  Recorder rec("psl27-steinberg-monomial");
  QsiContext ctx(cat.load("PSL27"), b);
  const auto& t = ctx.table();
  std::vector<std::uint64_t> degs;
  for (const auto& chi : t.irreducibles) degs.push_back(chi.degree());
  rec.check("degrees are 1,3,3,6,7,8", degs == std::vector<std::uint64_t>{1, 3, 3, 6, 7, 8});
  for (std::uint64_t d : {7u, 8u}) {
    auto idx = indices_of_degree(t, d);
    if (!rec.check("a unique degree-" + std::to_string(d) + " irreducible", idx.size() == 1)) continue;
    QsiVerdict v = decide_monomial_character(ctx, idx[0]);
    bool ok = v.status == QsiStatus::monomial_with_witness && v.witness;
    std::string detail(to_string(v.status));
    if (ok) detail += ", |U| = " + std::to_string(v.witness->subgroup_order);
    rec.check("degree-" + std::to_string(d) + " character is monomial", ok, detail);
    if (ok) rec.check("degree-" + std::to_string(d) + " witness re-verifies", verify_witness(ctx, t[idx[0]], *v.witness));
  }
  auto six = indices_of_degree(t, 6);
  if (rec.check("a unique degree-6 irreducible", six.size() == 1)) {
    QsiVerdict v = decide_qsi_character(ctx, six[0]);
    rec.check("degree-6 character refuted exhaustively", v.status == QsiStatus::refuted_exhaustive,
              std::string(to_string(v.status)));
  }
  bool no_14 = std::none_of(ctx.subgroups().begin(), ctx.subgroups().end(),
                            [](const SubgroupClass& s) { return s.order % 14 == 0 && s.order != 168; });
  rec.check("no proper subgroup has order divisible by 14", no_14);
  return rec.done();
}

ReproCaseResult psp43_2st_witness(const Catalog& cat, SearchBounds b) {
  Recorder rec("psp43-2st-witness");
  PermGroup g = cat.load("PSp43");
  const SubgroupDatum& datum = cat.subgroup("PSU42_U160");
  PermGroup u = load_subgroup(datum, g);
  rec.check("U has order 160", u.order() == 160);
  rec.check("U lies in G", u.is_subgroup_of(g));

  ClassesPtr gc = conjugacy_classes(g, b.element_bound);
  CharacterTable gt = character_table(gc);
  auto st = indices_of_degree(gt, 81);
  if (!rec.check("a unique degree-81 irreducible", st.size() == 1, std::to_string(st.size()))) return rec.done();
  const Character& steinberg = gt[st[0]];
  bool nonzero_on_3prime = true;
  for (std::size_t c = 0; c < gc->count(); ++c)
    if (gc->element_order(c) % 3 != 0 && steinberg[c].is_zero()) nonzero_on_3prime = false;
  rec.check("St is nonzero on 3'-elements", nonzero_on_3prime);

  ClassesPtr uc = conjugacy_classes(u, b.element_bound);
  CharacterTable ut = character_table(uc);
  std::vector<Cyclotomic> values;
  for (const auto& [a, m] : datum.linear_character) values.push_back(Cyclotomic::root_of_unity(m, a));
  auto phi_index = find_linear_character(ut, u.generators(), values);
  if (!rec.check("fixture values define a linear character of U", phi_index.has_value())) return rec.done();
  const Character& phi = ut[*phi_index];

  Character induced = induce(phi, gc);
  rec.check("phi^G = 2 St", induced == steinberg * Cyclotomic(2));
  rec.check("pointwise induction agrees", induce_pointwise(phi, gc) == induced);
  rec.check("St is not induced from U with multiplier 1", induced != steinberg);

  PermGroup ker = kernel(phi);
  PermGroup quot = quotient(u, ker, b.element_bound);
  rec.check("U/ker(phi) is solvable", is_solvable(quot), "|U/ker| = " + quot.order().get_str());
  rec.check("3 does not divide |ker(phi)|", ker.order() % 3 != 0, "|ker| = " + ker.order().get_str());
  return rec.done();
}

ReproCaseResult m11_generation_sample(const Catalog& cat, SearchBounds b) {
  Recorder rec("m11-generation-sample");
  PermGroup g = cat.load("M11");
  ElementTable t(g, b.element_bound);
  std::vector<std::size_t> of8, of11;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.order(i) == 8) of8.push_back(i);
    if (t.order(i) == 11) of11.push_back(i);
  }
  rec.check("M11 has elements of orders 8 and 11", !of8.empty() && !of11.empty());
  if (of8.empty() || of11.empty()) return rec.done();
  std::mt19937_64 rng(20110);
  std::uniform_int_distribution<std::size_t> pick8(0, of8.size() - 1), pick11(0, of11.size() - 1);
  int generating = 0;
  const int pairs = 200;
  for (int k = 0; k < pairs; ++k) {
    PermGroup h = PermGroup::generate(g.degree(), {t.element(of8[pick8(rng)]), t.element(of11[pick11(rng)])});
    if (h.order() == 7920) ++generating;
  }
  rec.check("every sampled pair generates M11", generating == pairs,
            std::to_string(generating) + " of " + std::to_string(pairs));
  return rec.done();
}

ReproCaseResult an_restriction_identity(const Catalog& cat, SearchBounds b) {
  Recorder rec("an-restriction-identity");
  for (unsigned n : {7u, 8u, 9u}) {
    PermGroup g = cat.load("A" + std::to_string(n));
    std::vector<Permutation> gens;
    for (unsigned k = 3; k <= n - 2; ++k)
      gens.push_back(Permutation::from_cycles("(1,2," + std::to_string(k) + ")", n));
    PermGroup u = PermGroup::generate(n, gens);
    std::string label = "A" + std::to_string(n);
    mpz_class half_factorial = 1;
    for (unsigned i = 3; i <= n - 2; ++i) half_factorial *= i;
    rec.check(label + ": subgroup is A" + std::to_string(n - 2), u.order() == half_factorial);
    ClassesPtr gc = conjugacy_classes(g, b.element_bound);
    ClassesPtr uc = conjugacy_classes(u, b.element_bound);
    Character chi = permutation_character(gc) - trivial_character(gc);
    Character res = restrict(chi, uc);
    Character expected = permutation_character(uc, n - 2) - trivial_character(uc) + trivial_character(uc) * Cyclotomic(2);
    rec.check(label + ": chi restricted equals chi_{n-2} + 2", res == expected);
  }
  return rec.done();
}

} // namespace

bool ReproCaseResult::passed() const {
  return !assertions.empty() && std::all_of(assertions.begin(), assertions.end(), [](const CaseAssertion& a) { return a.passed; });
}

const std::vector<std::string>& repro_case_ids() {
  static const std::vector<std::string> ids{"a5-not-qsi", "psl27-steinberg-monomial", "psp43-2st-witness",
                                            "m11-generation-sample", "an-restriction-identity"};
  return ids;
}

ReproCaseResult run_repro_case(std::string_view id, const Catalog& catalog, SearchBounds bounds) {
  if (id == "a5-not-qsi") return a5_not_qsi(catalog, bounds);
  if (id == "psl27-steinberg-monomial") return psl27_steinberg_monomial(catalog, bounds);
  if (id == "psp43-2st-witness") return psp43_2st_witness(catalog, bounds);
  if (id == "m11-generation-sample") return m11_generation_sample(catalog, bounds);
  if (id == "an-restriction-identity") return an_restriction_identity(catalog, bounds);
  throw NotFound("unknown case id '" + std::string(id) + "'");
}

} // namespace qsi
