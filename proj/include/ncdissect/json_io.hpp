#pragma once

#include "json.hpp"

#include "ncdissect/dissection.hpp"
#include "ncdissect/pairings.hpp"
#include "ncdissect/psi.hpp"
#include "ncdissect/spiders.hpp"

namespace ncdissect::json_io {

// Output objects keep key order; dump() of these is the canonical line form.
using Json = nlohmann::ordered_json;

Json to_json(const Dissection& d);
Json to_json(const PointedDissection& pd);
Json to_json(int s, int n, const PsiCode& code);
Json to_json(const SpiderCollection& c);
Json to_json(const AnnularSpiderCollection& ac);
Json legs_to_json(int s, int n, const std::vector<int>& legs);
Json to_json(const LabeledPairing& p);

// Parsers normalize ordering (sorted diagonals, canonical base rotation,
// sorted blocks and arcs) and throw InvalidInput on schema errors. They do
// not check the structural invariants of the parsed object.
Dissection dissection_from_json(const nlohmann::json& j);
PointedDissection pointed_from_json(const nlohmann::json& j);
PsiCode psi_code_from_json(const nlohmann::json& j, int& s, int& n);
SpiderCollection collection_from_json(const nlohmann::json& j);
AnnularSpiderCollection annular_from_json(const nlohmann::json& j);
std::vector<int> legs_from_json(const nlohmann::json& j, int& s, int& n);
LabeledPairing pairing_from_json(const nlohmann::json& j);

}  // namespace ncdissect::json_io
