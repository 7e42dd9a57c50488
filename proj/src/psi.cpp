#include "ncdissect/psi.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>

#include "ncdissect/errors.hpp"

namespace ncdissect {

namespace {

int wrap(int position, int vertex_count) {
  return (position - 1) % vertex_count + 1;
}

// Index j of the first sorted entry whose cyclic successor lies at least
// s+1 positions further anti-clockwise; the last entry wraps to the first.
std::optional<std::size_t> first_wide_gap(const std::vector<int>& sorted, int s,
                                          int vertex_count) {
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    const int next = j + 1 < sorted.size() ? sorted[j + 1] : sorted.front() + vertex_count;
    if (next - sorted[j] >= s + 1) return j;
  }
  return std::nullopt;
}

// Positions anchor+1 .. anchor+s, cyclically.
std::vector<bool> truncation_mask(int anchor, int s, int vertex_count) {
  std::vector<bool> cut(vertex_count + 1, false);
  for (int step = 1; step <= s; ++step) cut[wrap(anchor + step, vertex_count)] = true;
  return cut;
}

// Old position -> new position after removing the cut vertices (0 if cut).
std::vector<int> renumbering(const std::vector<bool>& cut) {
  std::vector<int> to_new(cut.size(), 0);
  int next = 0;
  for (std::size_t p = 1; p < cut.size(); ++p) {
    if (!cut[p]) to_new[p] = ++next;
  }
  return to_new;
}

PointedDissection decode_level(int s, int k, std::vector<int> a,
                               std::span<const std::uint8_t> eps) {
  const int vertex_count = s * k + 2;
  if (a.empty()) {
    Region whole;
    whole.vertices.resize(vertex_count);
    std::iota(whole.vertices.begin(), whole.vertices.end(), 1);
    return PointedDissection{Dissection{s, k, {}}, std::move(whole)};
  }
  const auto j = first_wide_gap(a, s, vertex_count);
  if (!j) throw InternalInvariantError("psi_decode: no gap of length s+1 in a-sequence");
  const int anchor = a[*j];
  const int far_end = wrap(anchor + s + 1, vertex_count);
  const bool is_diagonal = eps.front() == 1;

  const auto cut = truncation_mask(anchor, s, vertex_count);
  const auto to_new = renumbering(cut);
  std::vector<int> to_old(vertex_count - s + 1, 0);
  for (int p = 1; p <= vertex_count; ++p) {
    if (to_new[p]) to_old[to_new[p]] = p;
  }

  if (is_diagonal) a.erase(a.begin() + static_cast<std::ptrdiff_t>(*j));
  for (int& v : a) v = to_new[v];
  std::sort(a.begin(), a.end());

  const PointedDissection inner = decode_level(s, k - 1, std::move(a), eps.subspan(1));

  PointedDissection out{Dissection{s, k, {}}, {}};
  for (const auto& diag : inner.dissection.diagonals) {
    out.dissection.diagonals.push_back(make_diagonal(to_old[diag.u], to_old[diag.w]));
  }
  if (is_diagonal) out.dissection.diagonals.push_back(make_diagonal(anchor, far_end));
  std::sort(out.dissection.diagonals.begin(), out.dissection.diagonals.end());

  for (int v : inner.base.vertices) out.base.vertices.push_back(to_old[v]);
  // A face holding both ends of the boundary edge anchor--far_end of the
  // truncated polygon owns that edge; the cut vertices are restored into it.
  if (!is_diagonal && out.base.contains(anchor) && out.base.contains(far_end)) {
    for (int p = 1; p <= vertex_count; ++p) {
      if (cut[p]) out.base.vertices.push_back(p);
    }
  }
  std::sort(out.base.vertices.begin(), out.base.vertices.end());
  return out;
}

}  // namespace

void check_psi_code(int s, int n, const PsiCode& code) {
  if (s < 1 || n < 1) throw InvalidInput("require s >= 1 and n >= 1");
  if (static_cast<int>(code.eps.size()) != n - 1) {
    throw InvalidInput("eps must have length n-1 = " + std::to_string(n - 1));
  }
  std::size_t ones = 0;
  for (auto bit : code.eps) {
    if (bit > 1) throw InvalidInput("eps entries must be 0 or 1");
    ones += bit;
  }
  if (ones != code.a.size()) {
    throw InvalidInput("eps has " + std::to_string(ones) + " ones but a has " +
                       std::to_string(code.a.size()) + " entries");
  }
  const int vertex_count = s * n + 2;
  for (std::size_t k = 0; k < code.a.size(); ++k) {
    if (code.a[k] < 1 || code.a[k] > vertex_count) {
      throw InvalidInput("a entries must lie in 1.." + std::to_string(vertex_count));
    }
    if (k > 0 && code.a[k] < code.a[k - 1]) throw InvalidInput("a must be non-decreasing");
  }
}

PsiCode psi_encode(const PointedDissection& pd) {
  const DissectionReport report = validate(pd);
  if (!report.ok()) throw InvalidInput("psi_encode: " + report.message);

  const int s = pd.dissection.s;
  PsiCode code;
  code.a = beginnings_sequence(pd);
  code.eps.reserve(pd.dissection.n - 1);

  // `level` is always a fresh (sk+2)-gon numbered 1..sk+2; `labels` maps its
  // positions back to the original vertices.
  PointedDissection level = pd;
  std::vector<int> labels(pd.dissection.vertex_count() + 1);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<int> expected_beginnings = code.a;

  for (int k = pd.dissection.n; k >= 2; --k) {
    auto& diagonals = level.dissection.diagonals;
    if (diagonals.empty()) {
      code.eps.insert(code.eps.end(), k - 1, 0);
      break;
    }
    const int vertex_count = s * k + 2;
    const auto beginnings = beginnings_sequence(level);

    std::vector<int> relabelled;
    for (int b : beginnings) relabelled.push_back(labels[b]);
    std::sort(relabelled.begin(), relabelled.end());
    if (relabelled != expected_beginnings) {
      throw InternalInvariantError("psi_encode: beginnings changed under truncation");
    }

    const auto j = first_wide_gap(beginnings, s, vertex_count);
    if (!j) throw InternalInvariantError("psi_encode: no gap of length s+1");
    const int anchor = beginnings[*j];
    const Diagonal chord = make_diagonal(anchor, wrap(anchor + s + 1, vertex_count));
    const auto found = std::lower_bound(diagonals.begin(), diagonals.end(), chord);
    const bool is_diagonal = found != diagonals.end() && *found == chord;
    code.eps.push_back(is_diagonal ? 1 : 0);
    if (is_diagonal) {
      diagonals.erase(found);
      expected_beginnings.erase(
          std::find(expected_beginnings.begin(), expected_beginnings.end(), labels[anchor]));
    }

    const auto cut = truncation_mask(anchor, s, vertex_count);
    const auto to_new = renumbering(cut);
    for (auto& diag : diagonals) {
      if (cut[diag.u] || cut[diag.w]) {
        throw InternalInvariantError("psi_encode: truncated vertex is a diagonal endpoint");
      }
      diag = make_diagonal(to_new[diag.u], to_new[diag.w]);
    }
    std::sort(diagonals.begin(), diagonals.end());

    Region base;
    for (int v : level.base.vertices) {
      if (!cut[v]) {
        base.vertices.push_back(to_new[v]);
      } else if (is_diagonal) {
        throw InternalInvariantError("psi_encode: base region was cut off");
      }
    }
    if (base.vertices.size() < 3) throw InternalInvariantError("psi_encode: base collapsed");
    level.base = std::move(base);
    level.dissection.n = k - 1;

    std::vector<int> next_labels(vertex_count - s + 1, 0);
    for (int p = 1; p <= vertex_count; ++p) {
      if (to_new[p]) next_labels[to_new[p]] = labels[p];
    }
    labels = std::move(next_labels);
  }
  return code;
}

PointedDissection psi_decode(int s, int n, const PsiCode& code) {
  check_psi_code(s, n, code);
  return decode_level(s, n, code.a, code.eps);
}

std::vector<PsiCode> enumerate_psi_codes(int s, int n, int i) {
  if (s < 1 || n < 1 || i < 0 || i > n - 1) throw DomainError("require 0 <= i <= n-1");
  const int vertex_count = s * n + 2;

  std::vector<std::vector<int>> sequences;
  std::vector<int> seq;
  auto grow = [&](auto&& self, int low) -> void {
    if (static_cast<int>(seq.size()) == i) {
      sequences.push_back(seq);
      return;
    }
    for (int v = low; v <= vertex_count; ++v) {
      seq.push_back(v);
      self(self, v);
      seq.pop_back();
    }
  };
  grow(grow, 1);

  std::vector<std::vector<std::uint8_t>> bit_strings;
  std::vector<std::uint8_t> bits(n - 1, 0);
  std::fill(bits.end() - i, bits.end(), 1);
  do {
    bit_strings.push_back(bits);
  } while (std::next_permutation(bits.begin(), bits.end()));

  std::vector<PsiCode> out;
  out.reserve(sequences.size() * bit_strings.size());
  for (const auto& a : sequences) {
    for (const auto& eps : bit_strings) out.push_back(PsiCode{a, eps});
  }
  return out;
}

}  // namespace ncdissect
