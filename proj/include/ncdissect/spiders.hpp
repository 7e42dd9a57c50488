#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncdissect/numbers.hpp"

namespace ncdissect {

// Boundary vertices of the disc are 1..sn anti-clockwise. Gap g is the
// boundary arc from vertex g to vertex g+1 (gap sn closes the circle).

/// Feet of one spider, ascending.
using Block = std::vector<int>;

/// n pairwise non-crossing s-blocks covering 1..sn. Blocks are kept sorted
/// (by smallest foot).
struct SpiderCollection {
  int s = 2;
  int n = 1;
  std::vector<Block> blocks;

  friend auto operator<=>(const SpiderCollection&, const SpiderCollection&) = default;
};

/// A disc collection together with the complementary face holding the hole,
/// named by its smallest gap.
struct AnnularSpiderCollection {
  SpiderCollection base;
  int hole_gap = 1;

  friend auto operator<=>(const AnnularSpiderCollection&,
                          const AnnularSpiderCollection&) = default;
};

/// Up to n disjoint non-crossing s-blocks in 1..sn.
struct PartialSpiders {
  int s = 2;
  int n = 1;
  std::vector<Block> blocks;

  friend auto operator<=>(const PartialSpiders&, const PartialSpiders&) = default;
};

using GapFace = std::vector<int>;

/// Sorts feet and blocks into canonical order.
SpiderCollection make_collection(int s, int n, std::vector<Block> blocks);
PartialSpiders make_partial(int s, int n, std::vector<Block> blocks);

/// First violated invariant, or nullopt when valid.
std::optional<std::string> collection_violation(const SpiderCollection& c);
std::optional<std::string> partial_violation(const PartialSpiders& p);
std::optional<std::string> annular_violation(const AnnularSpiderCollection& ac);

/// Complementary faces as sets of gaps, ordered by smallest gap. Two gaps
/// share a face iff every block has them in the same sector.
std::vector<GapFace> faces_of_collection(const SpiderCollection& c);
std::vector<GapFace> faces_of_partial(const PartialSpiders& p);

/// Smallest gap of the face containing gap g.
int canonical_hole_gap(const SpiderCollection& c, int gap);

/// First leg of every spider as seen from the hole, ascending.
std::vector<int> first_legs(const AnnularSpiderCollection& ac);

/// The unique annular collection whose first legs are `legs`
/// (1 <= legs_1 < ... < legs_n <= sn).
AnnularSpiderCollection legs_decode(int s, int n, const std::vector<int>& legs);

SpiderCollection forget_hole(const AnnularSpiderCollection& ac);

/// All of F(s,n) in lexicographic order, by interval recursion.
std::vector<SpiderCollection> enumerate_disc(int s, int n);

/// All of A(s,n): each disc collection with each of its faces, in
/// (collection, smallest gap) order.
std::vector<AnnularSpiderCollection> enumerate_annular(int s, int n);

/// Every i-element set of disjoint, pairwise non-crossing s-blocks,
/// completable or not.
std::vector<PartialSpiders> enumerate_partials(int s, int n, int i);

/// Face criterion: each complementary face holds a multiple of s free vertices.
bool completable(const PartialSpiders& p);

/// Definition: some member of enumerate_disc(s,n) contains every block of p.
bool completable_brute_force(const PartialSpiders& p);

struct PartialCountLimits {
  int max_vertices = 16;  // refuse s*n above this
};

/// Completable i-element partial collections in the disc; annular counts
/// each one once per complementary face that may hold the hole.
BigCount count_partials(int s, int n, int i, bool annular, PartialCountLimits limits = {});

/// Same counts obtained by restricting every full (annular) collection to
/// its i-element sub-collections and deduplicating.
BigCount count_partials_brute_force(int s, int n, int i, bool annular,
                                    PartialCountLimits limits = {});

}  // namespace ncdissect
