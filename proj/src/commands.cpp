#include "ncdissect/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>

#include "ncdissect/dissection.hpp"
#include "ncdissect/errors.hpp"
#include "ncdissect/json_io.hpp"
#include "ncdissect/numbers.hpp"
#include "ncdissect/pairings.hpp"
#include "ncdissect/psi.hpp"
#include "ncdissect/spiders.hpp"
#include "ncdissect/svg.hpp"

namespace ncdissect::cli {

namespace {

int require_i(const std::optional<int>& i, const std::string& kind) {
  if (!i) throw DomainError("kind '" + kind + "' requires --i");
  return *i;
}

void emit(std::ostream& out, const json_io::Json& j) { out << j.dump() << '\n'; }

// Dispatches one parsed codec input line.
json_io::Json transform(const std::string& which, const nlohmann::json& in) {
  using namespace json_io;
  if (which == "psi-encode") {
    const auto pd = pointed_from_json(in);
    return to_json(pd.dissection.s, pd.dissection.n, psi_encode(pd));
  }
  if (which == "psi-decode") {
    int s = 0;
    int n = 0;
    const auto code = psi_code_from_json(in, s, n);
    return to_json(psi_decode(s, n, code));
  }
  if (which == "legs-encode") {
    const auto ac = annular_from_json(in);
    return legs_to_json(ac.base.s, ac.base.n, first_legs(ac));
  }
  if (which == "legs-decode") {
    int s = 0;
    int n = 0;
    const auto legs = legs_from_json(in, s, n);
    return to_json(legs_decode(s, n, legs));
  }
  if (which == "phi") return to_json(phi_forward(pairing_from_json(in)));
  if (which == "phi-inverse") return to_json(phi_inverse(collection_from_json(in)));
  throw DomainError("unknown codec '" + which + "'");
}

bool known_codec(const std::string& which) {
  for (const char* name :
       {"psi-encode", "psi-decode", "legs-encode", "legs-decode", "phi", "phi-inverse"}) {
    if (which == name) return true;
  }
  return false;
}

// Chooses the drawing for one render input line from the fields present.
std::string render_line(const nlohmann::json& in) {
  using namespace json_io;
  if (!in.is_object()) throw InvalidInput("expected a JSON object");
  if (in.contains("diagonals")) {
    if (in.contains("base")) {
      const auto pd = pointed_from_json(in);
      if (auto report = validate(pd); !report.ok()) throw InvalidInput(report.message);
      return svg::render(pd);
    }
    const auto d = dissection_from_json(in);
    if (auto report = validate(d); !report.ok()) throw InvalidInput(report.message);
    return svg::render(d);
  }
  if (in.contains("blocks")) {
    if (in.contains("hole_gap")) {
      const auto ac = annular_from_json(in);
      if (auto bad = annular_violation(ac)) throw InvalidInput(*bad);
      return svg::render(ac);
    }
    const auto c = collection_from_json(in);
    if (auto bad = collection_violation(c)) throw InvalidInput(*bad);
    return svg::render(c);
  }
  if (in.contains("arcs")) {
    const auto p = pairing_from_json(in);
    if (auto report = validate_pairing(p); !report.ok()) throw InvalidInput(report.message);
    return svg::render(p);
  }
  if (in.contains("eps")) {
    int s = 0;
    int n = 0;
    const auto code = psi_code_from_json(in, s, n);
    return svg::render(psi_decode(s, n, code));
  }
  if (in.contains("legs")) {
    int s = 0;
    int n = 0;
    const auto legs = legs_from_json(in, s, n);
    return svg::render(legs_decode(s, n, legs));
  }
  throw InvalidInput("unrecognized object");
}

}  // namespace

std::uint64_t max_items_from_env() {
  const char* raw = std::getenv("NCDISSECT_MAX_ITEMS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxItems;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) return kDefaultMaxItems;
  return value;
}

int cmd_count(const CountArgs& args, std::ostream& out, std::ostream& err) {
  try {
    BigCount value;
    const auto& kind = args.kind;
    if (kind == "q") {
      value = q_count({args.s, args.n, require_i(args.i, kind)});
    } else if (kind == "p") {
      value = p_count({args.s, args.n, require_i(args.i, kind)});
    } else if (kind == "f") {
      value = fuss_count(args.s, args.n);
    } else if (kind == "a") {
      value = a_count({args.s, args.n, require_i(args.i, kind)});
    } else if (kind == "d") {
      value = d_count({args.s, args.n, require_i(args.i, kind)});
    } else if (kind == "fprime") {
      if (args.s < 2 || args.n < 1) throw DomainError("fprime requires s >= 2 and n >= 1");
      if (fuss_count(args.s, args.n) > args.max_items) {
        err << "error: brute-force F' count would exceed the cap of " << args.max_items
            << " items\n";
        return kExitCapExceeded;
      }
      value = enumerate_pairings(args.s, args.n).size();
    } else {
      throw DomainError("unknown count kind '" + kind + "'");
    }
    out << value << '\n';
    return kExitOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadParams;
  }
}

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const auto& kind = args.kind;
    const int s = args.s;
    const int n = args.n;
    BigCount expected;
    std::function<void()> run;
    if (kind == "dissections" || kind == "pointed") {
      const int i = require_i(args.i, kind);
      expected = kind == "pointed" ? p_count({s, n, i}) : q_count({s, n, i});
      if (kind == "pointed") {
        run = [&, i] { for_each_pointed(s, n, i, [&](const auto& pd) { emit(out, json_io::to_json(pd)); }); };
      } else {
        run = [&, i] { for_each_dissection(s, n, i, [&](const auto& d) { emit(out, json_io::to_json(d)); }); };
      }
    } else if (kind == "spiders" || kind == "annular" || kind == "pairings") {
      if (s < 2 || n < 1) throw DomainError("kind '" + kind + "' requires s >= 2 and n >= 1");
      expected = kind == "annular" ? binomial(s * n, n) : fuss_count(s, n);
      if (kind == "spiders") {
        run = [&] { for (const auto& c : enumerate_disc(s, n)) emit(out, json_io::to_json(c)); };
      } else if (kind == "annular") {
        run = [&] { for (const auto& ac : enumerate_annular(s, n)) emit(out, json_io::to_json(ac)); };
      } else {
        run = [&] { for (const auto& p : enumerate_pairings(s, n)) emit(out, json_io::to_json(p)); };
      }
    } else {
      throw DomainError("unknown enumeration kind '" + kind + "'");
    }
    if (expected > args.max_items) {
      err << "error: " << expected << " items exceed the cap of " << args.max_items
          << " (raise --max-items or NCDISSECT_MAX_ITEMS)\n";
      return kExitCapExceeded;
    }
    run();
    return kExitOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadParams;
  }
}

int cmd_codec(const std::string& which, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!known_codec(which)) {
    err << "error: unknown codec '" << which << "'\n";
    return kExitBadParams;
  }
  bool any_failed = false;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    try {
      emit(out, transform(which, nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      any_failed = true;
      emit(out, json_io::Json{{"error", e.what()}, {"line", line_no}});
    }
  }
  return any_failed ? kExitFailure : kExitOk;
}

int cmd_render(std::istream& in, const std::filesystem::path& dir, std::ostream& err) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    err << "error: cannot create output directory " << dir << '\n';
    return kExitBadParams;
  }
  bool any_failed = false;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    std::string document;
    try {
      document = render_line(nlohmann::json::parse(line));
    } catch (const std::exception& e) {
      any_failed = true;
      err << "line " << line_no << ": " << e.what() << '\n';
      continue;
    }
    const auto path = dir / (std::to_string(line_no) + ".svg");
    std::ofstream file(path, std::ios::binary);
    file << document;
    if (!file) {
      err << "error: cannot write " << path << '\n';
      return kExitBadParams;
    }
  }
  return any_failed ? kExitFailure : kExitOk;
}

int cmd_verify(const VerifyOptions& options, bool json, std::ostream& out) {
  const VerifyReport report = run_verify(options);
  if (json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.to_text();
  }
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace ncdissect::cli
