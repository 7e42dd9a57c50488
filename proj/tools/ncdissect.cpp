// Command-line front end: count, enumerate, codec, render, verify.

#include <iostream>

#include "CLI11.hpp"
#include "ncdissect/commands.hpp"

namespace cli = ncdissect::cli;

int main(int argc, char** argv) {
  CLI::App app{"Enumerate, encode and verify polygon dissections, spider collections "
               "and Bisch-Jones pairings"};
  app.require_subcommand(1);

  cli::CountArgs count_args;
  auto* count = app.add_subcommand("count", "Print an exact count");
  count->add_option("kind", count_args.kind, "q | p | f | a | d | fprime")
      ->required()
      ->check(CLI::IsMember({"q", "p", "f", "a", "d", "fprime"}));
  count->add_option("--s", count_args.s, "piece-size parameter")->required();
  count->add_option("--n", count_args.n, "size parameter")->required();
  count->add_option("--i", count_args.i, "number of diagonals / spiders");
  std::optional<std::uint64_t> count_cap;
  count->add_option("--max-items", count_cap, "brute-force guard for fprime");

  cli::EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Stream objects as JSON lines");
  enumerate->add_option("kind", enum_args.kind, "dissections | pointed | spiders | annular | pairings")
      ->required()
      ->check(CLI::IsMember({"dissections", "pointed", "spiders", "annular", "pairings"}));
  enumerate->add_option("--s", enum_args.s)->required();
  enumerate->add_option("--n", enum_args.n)->required();
  enumerate->add_option("--i", enum_args.i);
  std::optional<std::uint64_t> enum_cap;
  enumerate->add_option("--max-items", enum_cap,
                        "refuse to emit more items (default NCDISSECT_MAX_ITEMS or 1000000)");

  std::string codec_name;
  auto* codec = app.add_subcommand("codec", "Transform JSON lines from stdin");
  codec->add_option("which", codec_name,
                    "psi-encode | psi-decode | legs-encode | legs-decode | phi | phi-inverse")
      ->required();

  std::string render_dir;
  auto* render = app.add_subcommand("render", "Draw JSON lines from stdin as SVG files");
  render->add_option("--out", render_dir, "output directory")->required();

  ncdissect::VerifyOptions verify_options;
  bool verify_json = false;
  std::string inject_fault;
  auto* verify = app.add_subcommand("verify", "Run the self-verification sweep");
  verify->add_option("--max-s", verify_options.max_s)->capture_default_str();
  verify->add_option("--max-n", verify_options.max_n)->capture_default_str();
  verify->add_option("--oracle-max-vertices", verify_options.oracle_max_vertices,
                     "largest s*n for partial-collection oracles")
      ->capture_default_str();
  verify->add_flag("--json", verify_json, "print the report as JSON");
  verify->add_option("--inject-fault", inject_fault, "shift expected values of one family")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitBadParams;
  }

  if (*count) {
    count_args.max_items = count_cap.value_or(cli::max_items_from_env());
    return cli::cmd_count(count_args, std::cout, std::cerr);
  }
  if (*enumerate) {
    enum_args.max_items = enum_cap.value_or(cli::max_items_from_env());
    return cli::cmd_enumerate(enum_args, std::cout, std::cerr);
  }
  if (*codec) return cli::cmd_codec(codec_name, std::cin, std::cout, std::cerr);
  if (*render) return cli::cmd_render(std::cin, render_dir, std::cerr);
  if (!inject_fault.empty()) verify_options.inject_fault = inject_fault;
  return cli::cmd_verify(verify_options, verify_json, std::cout);
}
