#pragma once

#include <string>

#include "json.hpp"
#include "qsi/decide.hpp"
#include "qsi/eliminate.hpp"

namespace qsi {

using Json = nlohmann::ordered_json;

/// {"conductor": e, "coefficients": [...], "text": ...}; coefficients are the
/// rational coordinates on 1, ζ_e, ..., ζ_e^(φ(e)-1), written as strings.
Json to_json(const Cyclotomic& c);
Json to_json(const Character& chi);
Json table_json(const std::string& group, const CharacterTable& t);
Json witness_json(const QsiWitness& w);
Json verdict_json(const QsiVerdict& v);
Json group_verdict_json(const std::string& group, const GroupVerdict& g);
Json elimination_json(const EliminationReport& r);

std::string table_text(const std::string& group, const CharacterTable& t);
std::string verdict_text(const QsiVerdict& v);
std::string group_verdict_text(const std::string& group, const GroupVerdict& g);
std::string elimination_text(const EliminationReport& r);

} // namespace qsi
