#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ncdissect/commands.hpp"

using namespace ncdissect;
namespace cli = ncdissect::cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run count(std::string kind, int s, int n, std::optional<int> i = std::nullopt) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::cmd_count({std::move(kind), s, n, i}, out, err);
  return {code, out.str(), err.str()};
}

Run enumerate(std::string kind, int s, int n, std::optional<int> i = std::nullopt,
              std::uint64_t cap = cli::kDefaultMaxItems) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::cmd_enumerate({std::move(kind), s, n, i, cap}, out, err);
  return {code, out.str(), err.str()};
}

Run codec(const std::string& which, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::cmd_codec(which, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& text) { return std::count(text.begin(), text.end(), '\n'); }

}  // namespace

TEST_CASE("count") {
  CHECK(count("q", 1, 4, 2).out == "21\n");
  CHECK(count("f", 3, 2).out == "3\n");
  CHECK(count("d", 2, 2, 1).out == "4\n");
  CHECK(count("a", 2, 2, 1).out == "8\n");
  CHECK(count("p", 1, 4, 3).out == "56\n");
  CHECK(count("fprime", 3, 2).out == "3\n");
  CHECK(count("q", 1, 4, 2).code == cli::kExitOk);

  const auto missing_i = count("q", 1, 4);
  CHECK(missing_i.code == cli::kExitBadParams);
  CHECK(missing_i.out.empty());
  CHECK_FALSE(missing_i.err.empty());
  CHECK(count("q", 1, 4, 4).code == cli::kExitBadParams);
  CHECK(count("f", 0, 2).code == cli::kExitBadParams);
  CHECK(count("fprime", 1, 2).code == cli::kExitBadParams);
  CHECK(count("zeta", 1, 2).code == cli::kExitBadParams);
}

TEST_CASE("enumerate") {
  const auto spiders = enumerate("spiders", 3, 2);
  CHECK(spiders.code == cli::kExitOk);
  CHECK(spiders.out ==
        "{\"s\":3,\"n\":2,\"blocks\":[[1,2,3],[4,5,6]]}\n"
        "{\"s\":3,\"n\":2,\"blocks\":[[1,2,6],[3,4,5]]}\n"
        "{\"s\":3,\"n\":2,\"blocks\":[[1,5,6],[2,3,4]]}\n");
  CHECK(lines(enumerate("dissections", 1, 3, 2).out) == 5);
  CHECK(lines(enumerate("pointed", 1, 2, 1).out) == 4);
  CHECK(lines(enumerate("annular", 2, 3).out) == 20);
  CHECK(lines(enumerate("pairings", 2, 4).out) == 14);

  CHECK(enumerate("dissections", 1, 3).code == cli::kExitBadParams);
  CHECK(enumerate("spiders", 1, 3).code == cli::kExitBadParams);
  CHECK(enumerate("pointed", 1, 3, 5).code == cli::kExitBadParams);

  const auto capped = enumerate("pointed", 1, 4, 3, 55);
  CHECK(capped.code == cli::kExitCapExceeded);
  CHECK(capped.out.empty());
  CHECK(enumerate("pointed", 1, 4, 3, 56).code == cli::kExitOk);
}

TEST_CASE("enumeration cap from the environment") {
  ::setenv("NCDISSECT_MAX_ITEMS", "7", 1);
  CHECK(cli::max_items_from_env() == 7);
  ::setenv("NCDISSECT_MAX_ITEMS", "junk", 1);
  CHECK(cli::max_items_from_env() == cli::kDefaultMaxItems);
  ::unsetenv("NCDISSECT_MAX_ITEMS");
  CHECK(cli::max_items_from_env() == cli::kDefaultMaxItems);
}

TEST_CASE("codec") {
  CHECK(codec("psi-decode", "{\"s\":1,\"n\":2,\"a\":[1],\"eps\":[1]}\n").out ==
        "{\"s\":1,\"n\":2,\"diagonals\":[[1,3]],\"base\":[1,3,4]}\n");
  CHECK(codec("psi-encode", "{\"s\":1,\"n\":4,\"diagonals\":[[1,4]],\"base\":[1,4,5,6]}\n").out ==
        "{\"s\":1,\"n\":4,\"a\":[1],\"eps\":[0,1,0]}\n");
  CHECK(codec("legs-decode", "{\"s\":2,\"n\":2,\"legs\":[1,2]}\n").out ==
        "{\"s\":2,\"n\":2,\"blocks\":[[1,4],[2,3]],\"hole_gap\":4}\n");
  CHECK(codec("legs-encode", "{\"s\":2,\"n\":2,\"blocks\":[[1,4],[2,3]],\"hole_gap\":4}\n").out ==
        "{\"s\":2,\"n\":2,\"legs\":[1,2]}\n");
  CHECK(codec("phi", "{\"s\":3,\"n\":1,\"arcs\":[[1,4],[2,3]]}\n").out ==
        "{\"s\":3,\"n\":1,\"blocks\":[[1,2,3]]}\n");
  CHECK(codec("phi-inverse", "{\"s\":3,\"n\":1,\"blocks\":[[1,2,3]]}\n").out ==
        "{\"s\":3,\"n\":1,\"arcs\":[[1,4],[2,3]]}\n");

  const auto mixed = codec("psi-decode",
                           "{\"s\":1,\"n\":2,\"a\":[1],\"eps\":[1]}\n"
                           "not json\n"
                           "{\"s\":1,\"n\":2,\"a\":[1,2],\"eps\":[1]}\n"
                           "{\"s\":1,\"n\":2,\"a\":[],\"eps\":[0]}\n");
  CHECK(mixed.code == cli::kExitFailure);
  std::istringstream rows(mixed.out);
  std::vector<nlohmann::json> parsed;
  for (std::string line; std::getline(rows, line);) parsed.push_back(nlohmann::json::parse(line));
  REQUIRE(parsed.size() == 4);
  CHECK(parsed[0].contains("diagonals"));
  CHECK(parsed[1]["line"] == 2);
  CHECK(parsed[1].contains("error"));
  CHECK(parsed[2]["line"] == 3);
  CHECK(parsed[3]["diagonals"].empty());

  CHECK(codec("nonsense", "").code == cli::kExitBadParams);
}

TEST_CASE("render") {
  const auto dir = std::filesystem::temp_directory_path() / "ncdissect_render_test";
  std::filesystem::remove_all(dir);
  std::istringstream in(
      "{\"s\":1,\"n\":4,\"diagonals\":[]}\n"
      "{\"s\":3,\"n\":2,\"blocks\":[[1,2,3],[4,5,6]]}\n"
      "{\"s\":3,\"n\":2,\"arcs\":[[1,4],[2,3],[5,8],[6,7]]}\n"
      "{\"s\":1,\"n\":4,\"diagonals\":[[1,4]],\"base\":[1,4,5,6]}\n"
      "{\"s\":2,\"n\":2,\"blocks\":[[1,4],[2,3]],\"hole_gap\":4}\n");
  std::ostringstream err;
  CHECK(cli::cmd_render(in, dir, err) == cli::kExitOk);
  for (int k = 1; k <= 5; ++k) CHECK(std::filesystem::exists(dir / (std::to_string(k) + ".svg")));
  std::ifstream first(dir / "1.svg");
  const std::string body((std::istreambuf_iterator<char>(first)), {});
  CHECK(body.find("<line") == std::string::npos);

  std::istringstream bad("{\"s\":1,\"n\":4,\"diagonals\":[[1,4],[3,6]]}\n");
  CHECK(cli::cmd_render(bad, dir, err) == cli::kExitFailure);

  const auto blocker = dir / "plain_file";
  std::ofstream(blocker) << "x";
  std::istringstream again("{\"s\":1,\"n\":4,\"diagonals\":[]}\n");
  CHECK(cli::cmd_render(again, blocker / "sub", err) == cli::kExitBadParams);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify") {
  VerifyOptions options;
  options.max_s = 2;
  options.max_n = 3;
  options.arithmetic_max_n = 10;
  std::ostringstream out;
  CHECK(cli::cmd_verify(options, false, out) == cli::kExitOk);
  const auto report = run_verify(options);
  CHECK(report.passed());
  CHECK(report.families().size() >= 8);
  CHECK(report.to_json()["pass"] == true);

  options.inject_fault = "phi-roundtrip";
  std::ostringstream faulty;
  CHECK(cli::cmd_verify(options, true, faulty) == cli::kExitFailure);
  const auto parsed = nlohmann::json::parse(faulty.str());
  CHECK(parsed["pass"] == false);
}
