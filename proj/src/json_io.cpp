#include "ncdissect/json_io.hpp"

#include <algorithm>

#include "ncdissect/errors.hpp"

namespace ncdissect::json_io {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  const auto value = j.get<long long>();
  if (value < -1'000'000'000LL || value > 1'000'000'000LL) {
    throw InvalidInput(std::string(what) + " is out of range");
  }
  return static_cast<int>(value);
}

std::vector<int> int_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(as_int(item, what));
  return out;
}

std::vector<std::pair<int, int>> pair_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<std::pair<int, int>> out;
  for (const auto& item : j) {
    const auto ends = int_list(item, what);
    if (ends.size() != 2) throw InvalidInput(std::string(what) + " entries must be pairs");
    out.emplace_back(ends[0], ends[1]);
  }
  return out;
}

void read_sn(const nlohmann::json& j, int& s, int& n) {
  s = as_int(field(j, "s"), "s");
  n = as_int(field(j, "n"), "n");
}

std::vector<Block> block_list(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("blocks must be an array");
  std::vector<Block> out;
  for (const auto& item : j) out.push_back(int_list(item, "blocks"));
  return out;
}

}  // namespace

Json to_json(const Dissection& d) {
  Json diagonals = Json::array();
  for (const auto& diag : d.diagonals) diagonals.push_back({diag.u, diag.w});
  return Json{{"s", d.s}, {"n", d.n}, {"diagonals", std::move(diagonals)}};
}

Json to_json(const PointedDissection& pd) {
  Json out = to_json(pd.dissection);
  out["base"] = pd.base.vertices;
  return out;
}

Json to_json(int s, int n, const PsiCode& code) {
  Json eps = Json::array();
  for (auto bit : code.eps) eps.push_back(static_cast<int>(bit));
  return Json{{"s", s}, {"n", n}, {"a", code.a}, {"eps", std::move(eps)}};
}

Json to_json(const SpiderCollection& c) {
  return Json{{"s", c.s}, {"n", c.n}, {"blocks", c.blocks}};
}

Json to_json(const AnnularSpiderCollection& ac) {
  Json out = to_json(ac.base);
  out["hole_gap"] = ac.hole_gap;
  return out;
}

Json legs_to_json(int s, int n, const std::vector<int>& legs) {
  return Json{{"s", s}, {"n", n}, {"legs", legs}};
}

Json to_json(const LabeledPairing& p) {
  Json arcs = Json::array();
  for (const auto& arc : p.arcs) arcs.push_back({arc.u, arc.v});
  return Json{{"s", p.s}, {"n", p.n}, {"arcs", std::move(arcs)}};
}

Dissection dissection_from_json(const nlohmann::json& j) {
  int s = 0;
  int n = 0;
  read_sn(j, s, n);
  return make_dissection(s, n, pair_list(field(j, "diagonals"), "diagonals"));
}

PointedDissection pointed_from_json(const nlohmann::json& j) {
  auto base = int_list(field(j, "base"), "base");
  if (base.empty()) throw InvalidInput("base must not be empty");
  return PointedDissection{dissection_from_json(j), canonical_region(std::move(base))};
}

PsiCode psi_code_from_json(const nlohmann::json& j, int& s, int& n) {
  read_sn(j, s, n);
  PsiCode code;
  code.a = int_list(field(j, "a"), "a");
  for (int bit : int_list(field(j, "eps"), "eps")) {
    if (bit != 0 && bit != 1) throw InvalidInput("eps entries must be 0 or 1");
    code.eps.push_back(static_cast<std::uint8_t>(bit));
  }
  return code;
}

SpiderCollection collection_from_json(const nlohmann::json& j) {
  int s = 0;
  int n = 0;
  read_sn(j, s, n);
  return make_collection(s, n, block_list(field(j, "blocks")));
}

AnnularSpiderCollection annular_from_json(const nlohmann::json& j) {
  return AnnularSpiderCollection{collection_from_json(j),
                                 as_int(field(j, "hole_gap"), "hole_gap")};
}

std::vector<int> legs_from_json(const nlohmann::json& j, int& s, int& n) {
  read_sn(j, s, n);
  auto legs = int_list(field(j, "legs"), "legs");
  return legs;
}

LabeledPairing pairing_from_json(const nlohmann::json& j) {
  int s = 0;
  int n = 0;
  read_sn(j, s, n);
  return make_pairing(s, n, pair_list(field(j, "arcs"), "arcs"));
}

}  // namespace ncdissect::json_io
