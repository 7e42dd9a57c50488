#include "ncdissect/pairings.hpp"

#include <algorithm>
#include <span>

#include "ncdissect/errors.hpp"

namespace ncdissect {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Vertices are renumbered 1..L inside every recursive frame; `partner` is
// indexed by vertex (slot 0 unused).
using Partner = std::vector<int>;

std::vector<Block> forward_blocks(int s, const Partner& partner) {
  const int length = static_cast<int>(partner.size()) - 1;
  const int block_size = s - 1;
  const int n = length / (2 * block_size);
  if (n == 0) return {};

  // Partners of the first block, w[l] for label l; non-crossing forces
  // s-1 < w[s-1] < ... < w[1].
  std::vector<int> w(s, 0);
  for (int l = 1; l <= block_size; ++l) w[l] = partner[l];
  // Region i lies strictly between bounds[i-1] and bounds[i].
  std::vector<int> bounds{block_size};
  for (int l = block_size; l >= 1; --l) bounds.push_back(w[l]);
  bounds.push_back(length + 1);
  for (std::size_t k = 1; k < bounds.size(); ++k) {
    if (bounds[k] <= bounds[k - 1]) throw InternalInvariantError("phi: first-block arcs are not nested");
  }

  std::vector<std::vector<Block>> region_blocks(s + 1);
  std::vector<int> sizes(s + 1, 0);  // r_i
  for (int i = 1; i <= s; ++i) {
    const int first = bounds[i - 1] + 1;
    const int region_length = bounds[i] - first;
    if (region_length % (2 * block_size) != 0) {
      throw InternalInvariantError("phi: region size is not a multiple of 2(s-1)");
    }
    sizes[i] = region_length / (2 * block_size);
    if (region_length == 0) continue;
    // Region vertex k sits at offset (k-1 + s-i) of the boundary interval;
    // the wrapped block then comes last and the region starts on a block
    // labelled upwards.
    const int rotation = s - i;
    Partner sub(region_length + 1, 0);
    for (int k = 1; k <= region_length; ++k) {
      const int x = first + mod(k - 1 + rotation, region_length);
      const int y = partner[x];
      if (y < first || y >= first + region_length) {
        throw InternalInvariantError("phi: arc leaves its region");
      }
      sub[k] = mod(y - first - rotation, region_length) + 1;
      if (label_of(s, sizes[i], k) != label_of(s, n, x)) {
        throw InternalInvariantError("phi: region relabelling broke the label rule");
      }
    }
    region_blocks[i] = forward_blocks(s, sub);
  }

  // Feet of the spider through vertex 1 leave s*r_i vertices for region i.
  std::vector<int> feet{1};
  for (int i = 1; i < s; ++i) feet.push_back(feet.back() + s * sizes[i] + 1);
  std::vector<Block> out{feet};
  for (int i = 1; i <= s; ++i) {
    const int region_length = s * sizes[i];
    for (const auto& block : region_blocks[i]) {
      Block placed;
      for (int k : block) placed.push_back(feet[i - 1] + 1 + mod(k - 1 + i - 1, region_length));
      std::sort(placed.begin(), placed.end());
      out.push_back(std::move(placed));
    }
  }
  return out;
}

Partner inverse_partner(int s, const std::vector<Block>& blocks, int vertex_count) {
  const int block_size = s - 1;
  const int n = vertex_count / s;
  Partner partner(2 * block_size * n + 1, 0);
  if (n == 0) return partner;

  const auto root = std::find_if(blocks.begin(), blocks.end(),
                                 [](const Block& b) { return b.front() == 1; });
  if (root == blocks.end()) throw InternalInvariantError("phi_inverse: no spider at vertex 1");
  const Block& feet = *root;

  std::vector<int> first(s + 1), length(s + 1);
  for (int t = 1; t <= s; ++t) {
    first[t] = feet[t - 1] + 1;
    const int last = t < s ? feet[t] - 1 : vertex_count;
    length[t] = last - first[t] + 1;
    if (length[t] % s != 0) throw InternalInvariantError("phi_inverse: region size not a multiple of s");
  }

  std::vector<std::vector<Block>> region_blocks(s + 1);
  for (const auto& block : blocks) {
    if (&block == &*root) continue;
    int t = s;
    while (block.front() < first[t]) --t;
    Block local;
    for (int v : block) {
      if (v < first[t] || v >= first[t] + length[t]) {
        throw InternalInvariantError("phi_inverse: spider leaves its region");
      }
      local.push_back(mod(v - first[t] - (t - 1), length[t]) + 1);
    }
    std::sort(local.begin(), local.end());
    region_blocks[t].push_back(std::move(local));
  }

  // Layout: first block, then for t = 1..s the interval of region t followed
  // (for t < s) by the partner of the first-block vertex labelled s-t.
  int cursor = block_size;
  for (int t = 1; t <= s; ++t) {
    const int start = cursor + 1;
    const int region_length = 2 * block_size * (length[t] / s);
    if (region_length > 0) {
      const Partner sub = inverse_partner(s, region_blocks[t], length[t]);
      const int rotation = s - t;
      auto place = [&](int k) { return start + mod(k - 1 + rotation, region_length); };
      for (int k = 1; k <= region_length; ++k) partner[place(k)] = place(sub[k]);
    }
    cursor += region_length;
    if (t < s) {
      const int endpoint = ++cursor;
      partner[s - t] = endpoint;
      partner[endpoint] = s - t;
    }
  }
  return partner;
}

Partner partner_table(const LabeledPairing& p) {
  Partner partner(p.vertex_count() + 1, 0);
  for (const auto& arc : p.arcs) {
    partner[arc.u] = arc.v;
    partner[arc.v] = arc.u;
  }
  return partner;
}

LabeledPairing from_partner_table(int s, int n, const Partner& partner) {
  LabeledPairing out{s, n, {}};
  for (int v = 1; v < static_cast<int>(partner.size()); ++v) {
    if (v < partner[v]) out.arcs.push_back({v, partner[v]});
  }
  return out;
}

// All label-respecting non-crossing perfect matchings of `verts` (circular
// order), as arc lists.
std::vector<std::vector<Arc>> matchings_of(std::span<const int> verts, int s, int n) {
  if (verts.empty()) return {{}};
  std::vector<std::vector<Arc>> out;
  const int head_label = label_of(s, n, verts.front());
  for (std::size_t k = 1; k < verts.size(); k += 2) {
    if (label_of(s, n, verts[k]) != head_label) continue;
    const auto inner = matchings_of(verts.subspan(1, k - 1), s, n);
    if (inner.empty()) continue;
    const auto outer = matchings_of(verts.subspan(k + 1), s, n);
    for (const auto& a : inner) {
      for (const auto& b : outer) {
        std::vector<Arc> arcs{{verts.front(), verts[k]}};
        arcs.insert(arcs.end(), a.begin(), a.end());
        arcs.insert(arcs.end(), b.begin(), b.end());
        out.push_back(std::move(arcs));
      }
    }
  }
  return out;
}

}  // namespace

LabeledPairing make_pairing(int s, int n, std::vector<std::pair<int, int>> pairs) {
  LabeledPairing p{s, n, {}};
  for (auto [a, b] : pairs) p.arcs.push_back(a < b ? Arc{a, b} : Arc{b, a});
  std::sort(p.arcs.begin(), p.arcs.end());
  return p;
}

int label_of(int s, int n, int v) {
  if (s < 2 || n < 0) throw DomainError("require s >= 2");
  if (v < 1 || v > 2 * (s - 1) * n) {
    throw InvalidInput("vertex " + std::to_string(v) + " outside 1.." +
                       std::to_string(2 * (s - 1) * n));
  }
  const int block = (v - 1) / (s - 1) + 1;
  const int position = (v - 1) % (s - 1) + 1;
  return block % 2 == 1 ? position : s - position;
}

PairingReport validate_pairing(const LabeledPairing& p) {
  auto fail = [](PairingViolation kind, std::string message) {
    return PairingReport{kind, std::move(message)};
  };
  if (p.s < 2 || p.n < 1) return fail(PairingViolation::bad_parameters, "require s >= 2 and n >= 1");
  const int vertex_count = p.vertex_count();
  std::vector<int> seen(vertex_count + 1, 0);
  for (const auto& arc : p.arcs) {
    for (int v : {arc.u, arc.v}) {
      if (v < 1 || v > vertex_count) {
        return fail(PairingViolation::vertex_out_of_range,
                    "vertex " + std::to_string(v) + " outside 1.." + std::to_string(vertex_count));
      }
      ++seen[v];
    }
  }
  for (int v = 1; v <= vertex_count; ++v) {
    if (seen[v] != 1) {
      return fail(PairingViolation::not_perfect,
                  "vertex " + std::to_string(v) + " is an end of " + std::to_string(seen[v]) +
                      " arcs");
    }
  }
  for (std::size_t a = 0; a < p.arcs.size(); ++a) {
    for (std::size_t b = a + 1; b < p.arcs.size(); ++b) {
      const auto& x = p.arcs[a];
      const auto& y = p.arcs[b];
      const bool cross = (x.u < y.u && y.u < x.v && x.v < y.v) ||
                         (y.u < x.u && x.u < y.v && y.v < x.v);
      if (cross) {
        return fail(PairingViolation::crossing,
                    "arcs (" + std::to_string(x.u) + "," + std::to_string(x.v) + ") and (" +
                        std::to_string(y.u) + "," + std::to_string(y.v) + ") cross");
      }
    }
  }
  for (const auto& arc : p.arcs) {
    if (label_of(p.s, p.n, arc.u) != label_of(p.s, p.n, arc.v)) {
      return fail(PairingViolation::label_mismatch,
                  "arc (" + std::to_string(arc.u) + "," + std::to_string(arc.v) +
                      ") joins different labels");
    }
  }
  return {};
}

std::vector<LabeledPairing> enumerate_pairings(int s, int n) {
  if (s < 2 || n < 1) throw DomainError("require s >= 2 and n >= 1");
  std::vector<int> verts(2 * (s - 1) * n);
  for (std::size_t k = 0; k < verts.size(); ++k) verts[k] = static_cast<int>(k) + 1;
  std::vector<LabeledPairing> out;
  for (auto& arcs : matchings_of(verts, s, n)) {
    std::sort(arcs.begin(), arcs.end());
    out.push_back(LabeledPairing{s, n, std::move(arcs)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpiderCollection phi_forward(const LabeledPairing& p) {
  const PairingReport report = validate_pairing(p);
  if (!report.ok()) throw InvalidInput("phi: " + report.message);
  auto out = make_collection(p.s, p.n, forward_blocks(p.s, partner_table(p)));
  if (auto bad = collection_violation(out)) throw InternalInvariantError("phi: " + *bad);
  return out;
}

LabeledPairing phi_inverse(const SpiderCollection& c) {
  if (auto bad = collection_violation(c)) throw InvalidInput("phi_inverse: " + *bad);
  auto out = from_partner_table(c.s, c.n, inverse_partner(c.s, c.blocks, c.s * c.n));
  const PairingReport report = validate_pairing(out);
  if (!report.ok()) throw InternalInvariantError("phi_inverse: " + report.message);
  return out;
}

}  // namespace ncdissect
