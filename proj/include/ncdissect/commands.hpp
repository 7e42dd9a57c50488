#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "ncdissect/verify.hpp"

namespace ncdissect::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // a codec line or verify check failed
inline constexpr int kExitBadParams = 2;
inline constexpr int kExitCapExceeded = 3;

inline constexpr std::uint64_t kDefaultMaxItems = 1'000'000;

/// NCDISSECT_MAX_ITEMS when set to a positive integer, else the default.
std::uint64_t max_items_from_env();

struct CountArgs {
  std::string kind;  // q, p, f, a, d, fprime
  int s = 1;
  int n = 1;
  std::optional<int> i;
  std::uint64_t max_items = kDefaultMaxItems;  // guard for fprime
};

struct EnumerateArgs {
  std::string kind;  // dissections, pointed, spiders, annular, pairings
  int s = 1;
  int n = 1;
  std::optional<int> i;
  std::uint64_t max_items = kDefaultMaxItems;
};

int cmd_count(const CountArgs& args, std::ostream& out, std::ostream& err);
int cmd_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err);

/// which: psi-encode, psi-decode, legs-encode, legs-decode, phi, phi-inverse.
/// One output line per input line; failures become {"error":...,"line":k}.
int cmd_codec(const std::string& which, std::istream& in, std::ostream& out, std::ostream& err);

/// Writes <k>.svg for input line k (1-based) into `dir`.
int cmd_render(std::istream& in, const std::filesystem::path& dir, std::ostream& err);

int cmd_verify(const VerifyOptions& options, bool json, std::ostream& out);

}  // namespace ncdissect::cli
