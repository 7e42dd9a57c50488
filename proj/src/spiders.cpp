#include "ncdissect/spiders.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <span>

#include "ncdissect/errors.hpp"

namespace ncdissect {

namespace {

// Index of the sector of `block` containing gap g (or non-foot vertex g):
// the number of feet <= g, with the wrap-around sector folded onto 0.
int sector(const Block& block, int g) {
  const int feet_up_to =
      static_cast<int>(std::upper_bound(block.begin(), block.end(), g) - block.begin());
  return feet_up_to == static_cast<int>(block.size()) ? 0 : feet_up_to;
}

bool blocks_cross(const Block& a, const Block& b) {
  const int first = sector(a, b.front());
  return std::any_of(b.begin(), b.end(), [&](int v) { return sector(a, v) != first; });
}

std::optional<std::string> blocks_violation(int s, int n, const std::vector<Block>& blocks) {
  if (s < 2 || n < 1) return "require s >= 2 and n >= 1";
  const int vertex_count = s * n;
  std::vector<bool> used(vertex_count + 1, false);
  for (const auto& block : blocks) {
    if (static_cast<int>(block.size()) != s) {
      return "every block must have exactly s=" + std::to_string(s) + " feet";
    }
    for (std::size_t k = 0; k < block.size(); ++k) {
      const int v = block[k];
      if (v < 1 || v > vertex_count) {
        return "foot " + std::to_string(v) + " outside 1.." + std::to_string(vertex_count);
      }
      if (k > 0 && block[k - 1] >= v) return "feet must be strictly increasing";
      if (used[v]) return "vertex " + std::to_string(v) + " used twice";
      used[v] = true;
    }
  }
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      if (blocks_cross(blocks[a], blocks[b])) return std::string("blocks cross");
    }
  }
  return std::nullopt;
}

std::vector<GapFace> gap_faces(int s, int n, const std::vector<Block>& blocks) {
  std::map<std::vector<int>, GapFace> by_signature;
  std::vector<int> signature(blocks.size());
  for (int g = 1; g <= s * n; ++g) {
    for (std::size_t b = 0; b < blocks.size(); ++b) signature[b] = sector(blocks[b], g);
    by_signature[signature].push_back(g);
  }
  std::vector<GapFace> out;
  out.reserve(by_signature.size());
  for (auto& [sig, face] : by_signature) out.push_back(std::move(face));
  std::sort(out.begin(), out.end());
  return out;
}

void require_collection(const SpiderCollection& c) {
  if (auto bad = collection_violation(c)) throw InvalidInput(*bad);
}

void require_partial(const PartialSpiders& p) {
  if (auto bad = partial_violation(p)) throw InvalidInput(*bad);
}

// All partitions of `verts` (in circular order) into non-crossing s-blocks.
// The block of verts[0] is chosen first; every stretch it leaves between two
// consecutive feet, and after its last foot, is filled independently.
std::vector<std::vector<Block>> partitions_of(std::span<const int> verts, int s) {
  if (verts.empty()) return {{}};
  std::vector<std::vector<Block>> out;
  const int len = static_cast<int>(verts.size());
  std::vector<int> idx{0};
  auto choose = [&](auto&& self) -> void {
    if (static_cast<int>(idx.size()) == s) {
      if ((len - 1 - idx.back()) % s != 0) return;
      std::vector<std::vector<Block>> partial{{Block{}}};
      for (int k : idx) partial.front().front().push_back(verts[k]);
      for (int t = 0; t < s; ++t) {
        const int from = idx[t] + 1;
        const int to = t + 1 < s ? idx[t + 1] : len;
        const auto fills = partitions_of(verts.subspan(from, to - from), s);
        std::vector<std::vector<Block>> combined;
        combined.reserve(partial.size() * fills.size());
        for (const auto& left : partial) {
          for (const auto& right : fills) {
            auto merged = left;
            merged.insert(merged.end(), right.begin(), right.end());
            combined.push_back(std::move(merged));
          }
        }
        partial = std::move(combined);
      }
      out.insert(out.end(), partial.begin(), partial.end());
      return;
    }
    for (int next = idx.back() + 1; next < len; next += s) {
      idx.push_back(next);
      self(self);
      idx.pop_back();
    }
  };
  choose(choose);
  return out;
}

std::vector<Block> all_blocks(int s, int vertex_count) {
  std::vector<Block> out;
  Block current;
  auto grow = [&](auto&& self, int low) -> void {
    if (static_cast<int>(current.size()) == s) {
      out.push_back(current);
      return;
    }
    for (int v = low; v <= vertex_count; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  grow(grow, 1);
  return out;
}

void require_partial_params(int s, int n, int i, const PartialCountLimits& limits) {
  if (s < 2 || n < 1 || i < 0 || i > n) throw DomainError("require s >= 2, n >= 1, 0 <= i <= n");
  if (s * n > limits.max_vertices) {
    throw SizeGuardError("s*n = " + std::to_string(s * n) + " exceeds the oracle limit of " +
                         std::to_string(limits.max_vertices) + " vertices");
  }
}

// Calls visit(chosen) for every i-subset of `items`, in lexicographic order.
template <typename T, typename Visit>
void for_each_subset(const std::vector<T>& items, int i, Visit&& visit) {
  std::vector<T> chosen;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == i) {
      visit(chosen);
      return;
    }
    for (std::size_t k = from; k < items.size(); ++k) {
      chosen.push_back(items[k]);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  grow(grow, 0);
}

}  // namespace

SpiderCollection make_collection(int s, int n, std::vector<Block> blocks) {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end());
  return SpiderCollection{s, n, std::move(blocks)};
}

PartialSpiders make_partial(int s, int n, std::vector<Block> blocks) {
  auto c = make_collection(s, n, std::move(blocks));
  return PartialSpiders{c.s, c.n, std::move(c.blocks)};
}

std::optional<std::string> collection_violation(const SpiderCollection& c) {
  if (static_cast<int>(c.blocks.size()) != c.n) {
    return "a full collection needs exactly n=" + std::to_string(c.n) + " blocks";
  }
  return blocks_violation(c.s, c.n, c.blocks);
}

std::optional<std::string> partial_violation(const PartialSpiders& p) {
  if (static_cast<int>(p.blocks.size()) > p.n) return "more than n blocks";
  return blocks_violation(p.s, p.n, p.blocks);
}

std::optional<std::string> annular_violation(const AnnularSpiderCollection& ac) {
  if (auto bad = collection_violation(ac.base)) return bad;
  const int vertex_count = ac.base.s * ac.base.n;
  if (ac.hole_gap < 1 || ac.hole_gap > vertex_count) {
    return "hole_gap outside 1.." + std::to_string(vertex_count);
  }
  if (canonical_hole_gap(ac.base, ac.hole_gap) != ac.hole_gap) {
    return "hole_gap is not the smallest gap of its face";
  }
  return std::nullopt;
}

std::vector<GapFace> faces_of_collection(const SpiderCollection& c) {
  require_collection(c);
  return gap_faces(c.s, c.n, c.blocks);
}

std::vector<GapFace> faces_of_partial(const PartialSpiders& p) {
  require_partial(p);
  return gap_faces(p.s, p.n, p.blocks);
}

int canonical_hole_gap(const SpiderCollection& c, int gap) {
  for (const auto& face : gap_faces(c.s, c.n, c.blocks)) {
    if (std::binary_search(face.begin(), face.end(), gap)) return face.front();
  }
  throw InvalidInput("gap " + std::to_string(gap) + " is not a gap of the disc");
}

std::vector<int> first_legs(const AnnularSpiderCollection& ac) {
  if (auto bad = annular_violation(ac)) throw InvalidInput(*bad);
  std::vector<int> legs;
  legs.reserve(ac.base.blocks.size());
  for (const auto& block : ac.base.blocks) {
    // The hole sits in the sector ending at this foot.
    legs.push_back(block[sector(block, ac.hole_gap)]);
  }
  std::sort(legs.begin(), legs.end());
  return legs;
}

AnnularSpiderCollection legs_decode(int s, int n, const std::vector<int>& legs) {
  if (s < 2 || n < 1) throw InvalidInput("require s >= 2 and n >= 1");
  if (static_cast<int>(legs.size()) != n) {
    throw InvalidInput("need exactly n=" + std::to_string(n) + " legs");
  }
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (legs[k] < 1 || legs[k] > s * n) {
      throw InvalidInput("legs must lie in 1.." + std::to_string(s * n));
    }
    if (k > 0 && legs[k] <= legs[k - 1]) throw InvalidInput("legs must be strictly increasing");
  }

  // Outer boundary of the current annulus, ascending; legs still to place.
  std::vector<int> boundary(s * n);
  for (int v = 1; v <= s * n; ++v) boundary[v - 1] = v;
  std::vector<int> pending = legs;
  std::vector<Block> blocks;
  int hole_gap = 0;

  while (!pending.empty()) {
    const int size = static_cast<int>(boundary.size());
    std::vector<int> positions;
    for (int leg : pending) {
      positions.push_back(static_cast<int>(
          std::lower_bound(boundary.begin(), boundary.end(), leg) - boundary.begin()));
    }
    std::size_t j = 0;
    for (; j < positions.size(); ++j) {
      const int next = j + 1 < positions.size() ? positions[j + 1] : positions.front() + size;
      if (next - positions[j] >= s) break;
    }
    if (j == positions.size()) throw InternalInvariantError("legs_decode: no gap of length s");

    Block block;
    for (int t = 0; t < s; ++t) block.push_back(boundary[(positions[j] + t) % size]);
    if (pending.size() == 1) {
      // The last spider fills the annulus; the hole lies just before its first leg.
      hole_gap = boundary[(positions[j] + size - 1) % size];
    }
    std::sort(block.begin(), block.end());
    std::erase_if(boundary, [&](int v) { return std::binary_search(block.begin(), block.end(), v); });
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(j));
    blocks.push_back(std::move(block));
  }

  AnnularSpiderCollection out{make_collection(s, n, std::move(blocks)), 0};
  out.hole_gap = canonical_hole_gap(out.base, hole_gap);
  return out;
}

SpiderCollection forget_hole(const AnnularSpiderCollection& ac) { return ac.base; }

std::vector<SpiderCollection> enumerate_disc(int s, int n) {
  if (s < 2 || n < 1) throw DomainError("require s >= 2 and n >= 1");
  std::vector<int> verts(s * n);
  for (int v = 1; v <= s * n; ++v) verts[v - 1] = v;
  std::vector<SpiderCollection> out;
  for (auto& blocks : partitions_of(verts, s)) out.push_back(make_collection(s, n, std::move(blocks)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AnnularSpiderCollection> enumerate_annular(int s, int n) {
  std::vector<AnnularSpiderCollection> out;
  for (auto& c : enumerate_disc(s, n)) {
    for (const auto& face : gap_faces(s, n, c.blocks)) out.push_back({c, face.front()});
  }
  return out;
}

std::vector<PartialSpiders> enumerate_partials(int s, int n, int i) {
  if (s < 2 || n < 1 || i < 0 || i > n) throw DomainError("require s >= 2, n >= 1, 0 <= i <= n");
  const auto candidates = all_blocks(s, s * n);
  std::vector<PartialSpiders> out;
  std::vector<Block> chosen;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == i) {
      out.push_back(make_partial(s, n, chosen));
      return;
    }
    for (std::size_t k = from; k < candidates.size(); ++k) {
      const Block& cand = candidates[k];
      const bool clash = std::any_of(chosen.begin(), chosen.end(), [&](const Block& b) {
        return std::find_first_of(b.begin(), b.end(), cand.begin(), cand.end()) != b.end() ||
               blocks_cross(b, cand);
      });
      if (clash) continue;
      chosen.push_back(cand);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  grow(grow, 0);
  return out;
}

bool completable(const PartialSpiders& p) {
  require_partial(p);
  std::vector<bool> used(p.s * p.n + 1, false);
  for (const auto& block : p.blocks) {
    for (int v : block) used[v] = true;
  }
  std::map<std::vector<int>, int> free_per_face;
  std::vector<int> signature(p.blocks.size());
  for (int v = 1; v <= p.s * p.n; ++v) {
    if (used[v]) continue;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) signature[b] = sector(p.blocks[b], v);
    ++free_per_face[signature];
  }
  return std::all_of(free_per_face.begin(), free_per_face.end(),
                     [&](const auto& entry) { return entry.second % p.s == 0; });
}

bool completable_brute_force(const PartialSpiders& p) {
  require_partial(p);
  for (const auto& full : enumerate_disc(p.s, p.n)) {
    const bool contains_all = std::all_of(p.blocks.begin(), p.blocks.end(), [&](const Block& b) {
      return std::binary_search(full.blocks.begin(), full.blocks.end(), b);
    });
    if (contains_all) return true;
  }
  return false;
}

BigCount count_partials(int s, int n, int i, bool annular, PartialCountLimits limits) {
  require_partial_params(s, n, i, limits);
  BigCount total = 0;
  for (const auto& p : enumerate_partials(s, n, i)) {
    if (!completable(p)) continue;
    if (annular) {
      total += gap_faces(s, n, p.blocks).size();
    } else {
      total += 1;
    }
  }
  return total;
}

BigCount count_partials_brute_force(int s, int n, int i, bool annular,
                                    PartialCountLimits limits) {
  require_partial_params(s, n, i, limits);
  // A partial (with hole) is recorded by its blocks, plus for the annulus the
  // smallest gap of its face that contains the hole of the full collection.
  std::set<std::pair<std::vector<Block>, int>> seen;
  for (const auto& full : enumerate_annular(s, n)) {
    for_each_subset(full.base.blocks, i, [&](const std::vector<Block>& sub) {
      int hole = 0;
      if (annular) {
        for (const auto& face : gap_faces(s, n, sub)) {
          if (std::binary_search(face.begin(), face.end(), full.hole_gap)) hole = face.front();
        }
      }
      seen.emplace(sub, hole);
    });
  }
  return seen.size();
}

}  // namespace ncdissect
