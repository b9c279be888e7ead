#include "qsi/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qsi {

Json to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coefficients()) coeffs.push_back(q.get_str());
  return Json{{"conductor", c.conductor()}, {"coefficients", coeffs}, {"text", c.to_string()}};
}

Json to_json(const Character& chi) {
  Json values = Json::array();
  for (const auto& v : chi.values()) values.push_back(to_json(v));
  return Json{{"degree", chi.degree()}, {"values", values}};
}

Json table_json(const std::string& group, const CharacterTable& t) {
  const ConjugacyClassSet& cls = *t.classes;
  Json classes = Json::array();
  for (std::size_t c = 0; c < cls.count(); ++c)
    classes.push_back(Json{{"representative", cls.representative(c).to_cycle_string()},
                           {"size", cls.size(c)},
                           {"element_order", cls.element_order(c)}});
  Json irr = Json::array();
  for (const auto& chi : t.irreducibles) irr.push_back(to_json(chi));
  return Json{{"command", "table"},
              {"group", group},
              {"order", cls.group().order().get_str()},
              {"classes", classes},
              {"irreducibles", irr}};
}

Json witness_json(const QsiWitness& w) {
  Json gens = Json::array();
  for (const auto& g : w.subgroup.generators()) gens.push_back(g.to_cycle_string());
  return Json{{"subgroup_order", w.subgroup_order},
              {"subgroup_generators", gens},
              {"char_index", w.char_index},
              {"phi", to_json(w.phi)},
              {"multiplier", w.multiplier},
              {"solvable_quotient_order", w.solvable_quotient_order}};
}

Json verdict_json(const QsiVerdict& v) {
  Json log = Json::array();
  for (const auto& e : v.pruning_log)
    log.push_back(Json{{"subgroup_class", e.subgroup_class}, {"subgroup_order", e.subgroup_order}, {"reason", e.reason}});
  Json j{{"char_index", v.char_index},
         {"character", to_json(v.character)},
         {"status", std::string(to_string(v.status))},
         {"witness", v.witness ? witness_json(*v.witness) : Json(nullptr)},
         {"pruning_log", log}};
  return j;
}

Json group_verdict_json(const std::string& group, const GroupVerdict& g) {
  Json verdicts = Json::array();
  for (const auto& v : g.verdicts) verdicts.push_back(verdict_json(v));
  return Json{{"command", "qsi"},
              {"group", group},
              {"mode", g.monomial_mode ? "monomial" : "qsi"},
              {"solvable", g.solvable},
              {"holds", g.holds ? Json(*g.holds) : Json(nullptr)},
              {"verdicts", verdicts}};
}

Json elimination_json(const EliminationReport& r) {
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json missing = Json::array();
    for (const auto& m : c.missing) missing.push_back(Json{{"d", m.d}, {"prime", m.prime.get_str()}});
    cands.push_back(Json{{"label", c.label},
                         {"order_bound", c.descent ? Json(nullptr) : Json(c.order_bound.get_str())},
                         {"descent", c.descent},
                         {"headline_d", c.headline_d ? Json(*c.headline_d) : Json(nullptr)},
                         {"missing_ppds", missing},
                         {"note", c.note}});
  }
  return Json{{"command", "eliminate"},
              {"family", std::string(family_name(r.family))},
              {"n", r.n},
              {"q", r.q.get_str()},
              {"group", r.group},
              {"simple_order", r.simple_order.get_str()},
              {"steinberg_degree", r.steinberg_degree.get_str()},
              {"torus", Json{{"element_order", r.torus.element_order.get_str()},
                             {"torus_order", r.torus.torus_order.get_str()}}},
              {"candidates", cands},
              {"zsigmondy_exceptions_hit", r.zsigmondy_exceptions_hit},
              {"manual_case", r.manual_case},
              {"manual_note", r.manual_note},
              {"eliminated", r.eliminated()}};
}

namespace {

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

} // namespace

std::string table_text(const std::string& group, const CharacterTable& t) {
  const ConjugacyClassSet& cls = *t.classes;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"", }, sizes{"size"}, orders{"order"};
  for (std::size_t c = 0; c < cls.count(); ++c) {
    head.push_back("C" + std::to_string(c + 1));
    sizes.push_back(std::to_string(cls.size(c)));
    orders.push_back(std::to_string(cls.element_order(c)));
  }
  rows.push_back(head);
  rows.push_back(orders);
  rows.push_back(sizes);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> r{"X" + std::to_string(i + 1)};
    for (const auto& v : t[i].values()) r.push_back(v.to_string());
    rows.push_back(r);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
  std::ostringstream out;
  out << group << ": order " << cls.group().order().get_str() << ", " << cls.count() << " classes\n";
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t k = 0; k < r.size(); ++k) line += (k ? "  " : "") + pad(r[k], width[k]);
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  }
  out << "representatives:\n";
  for (std::size_t c = 0; c < cls.count(); ++c)
    out << "  C" << c + 1 << " " << cls.representative(c).to_cycle_string() << "\n";
  return out.str();
}

std::string verdict_text(const QsiVerdict& v) {
  std::ostringstream out;
  out << "X" << v.char_index + 1 << " (degree " << v.character.degree() << "): " << to_string(v.status);
  if (v.witness) {
    const auto& w = *v.witness;
    out << "\n  witness: |U| = " << w.subgroup_order << ", phi = irreducible " << w.char_index + 1 << " of U (degree "
        << w.phi.degree() << "), k = " << w.multiplier << ", |U/ker(phi)| = " << w.solvable_quotient_order;
    std::vector<std::string> gens;
    for (const auto& g : w.subgroup.generators()) gens.push_back(g.to_cycle_string());
    out << "\n  U = <" << join(gens, ", ") << ">";
  }
  if (!v.pruning_log.empty()) {
    std::map<std::string, int> counts;
    for (const auto& e : v.pruning_log) ++counts[e.reason];
    std::vector<std::string> parts;
    for (const auto& [k, n] : counts) parts.push_back(k + " " + std::to_string(n));
    out << "\n  subgroup classes: " << v.pruning_log.size() << " (" << join(parts, ", ") << ")";
  }
  out << "\n";
  return out.str();
}

std::string group_verdict_text(const std::string& group, const GroupVerdict& g) {
  std::ostringstream out;
  const char* what = g.monomial_mode ? "monomial" : "QSI";
  for (const auto& v : g.verdicts) out << verdict_text(v);
  out << group << ": " << (g.holds ? (*g.holds ? std::string("") : std::string("not ")) + what : std::string("undecided (")
                                                                                               + what + ")")
      << "; " << (g.solvable ? "solvable" : "not solvable") << "\n";
  return out.str();
}

std::string elimination_text(const EliminationReport& r) {
  std::ostringstream out;
  out << r.group << "  |S| = " << r.simple_order.get_str() << "  St(1) = " << r.steinberg_degree.get_str()
      << "  ord(x) = " << r.torus.element_order.get_str() << "  |T| = " << r.torus.torus_order.get_str() << "\n";
  std::size_t lw = 9, bw = 11;
  for (const auto& c : r.candidates) {
    lw = std::max(lw, c.label.size());
    bw = std::max(bw, c.descent ? std::size_t{7} : c.order_bound.get_str().size());
  }
  out << pad("candidate", lw) << "  " << pad("order bound", bw) << "  lost ppds (d:prime)\n";
  for (const auto& c : r.candidates) {
    std::vector<std::string> miss;
    for (const auto& m : c.missing) miss.push_back(std::to_string(m.d) + ":" + m.prime.get_str());
    std::string tail = c.descent ? "descent" : (miss.empty() ? "none" : join(miss, " "));
    if (c.headline_d) tail += "  [q^" + std::to_string(*c.headline_d) + "-1]";
    if (!c.note.empty()) tail += "  " + c.note;
    out << pad(c.label, lw) << "  " << pad(c.descent ? "-" : c.order_bound.get_str(), bw) << "  " << tail << "\n";
  }
  if (!r.zsigmondy_exceptions_hit.empty()) {
    std::vector<std::string> d;
    for (unsigned x : r.zsigmondy_exceptions_hit) d.push_back(std::to_string(x));
    out << "zsigmondy exceptions at d = " << join(d, ", ") << "\n";
  }
  if (r.manual_case) out << "manual case: " << r.manual_note << "\n";
  out << (r.eliminated() ? "every candidate overgroup is eliminated\n" : "not settled by orders alone\n");
  return out.str();
}

} // namespace qsi
