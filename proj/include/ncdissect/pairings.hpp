#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ncdissect/spiders.hpp"

namespace ncdissect {

// Vertices 1..2(s-1)n anti-clockwise, in 2n blocks of s-1 consecutive
// vertices. Odd blocks are labelled 1..s-1, even blocks s-1..1.

struct Arc {
  int u = 0;  // u < v
  int v = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct LabeledPairing {
  int s = 2;
  int n = 1;
  std::vector<Arc> arcs;  // sorted

  int vertex_count() const { return 2 * (s - 1) * n; }

  friend auto operator<=>(const LabeledPairing&, const LabeledPairing&) = default;
};

LabeledPairing make_pairing(int s, int n, std::vector<std::pair<int, int>> pairs);

int label_of(int s, int n, int v);

enum class PairingViolation {
  none,
  bad_parameters,
  vertex_out_of_range,
  not_perfect,
  crossing,
  label_mismatch,
};

struct PairingReport {
  PairingViolation kind = PairingViolation::none;
  std::string message;

  bool ok() const { return kind == PairingViolation::none; }
};

PairingReport validate_pairing(const LabeledPairing& p);

/// All of F'(s,n), sorted.
std::vector<LabeledPairing> enumerate_pairings(int s, int n);

/// Bijection F'(s,n) -> F(s,n).
SpiderCollection phi_forward(const LabeledPairing& p);

/// Bijection F(s,n) -> F'(s,n), inverse of phi_forward.
LabeledPairing phi_inverse(const SpiderCollection& c);

}  // namespace ncdissect
