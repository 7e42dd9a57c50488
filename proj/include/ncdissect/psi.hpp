#pragma once

#include <cstdint>
#include <vector>

#include "ncdissect/dissection.hpp"

namespace ncdissect {

/// Code of a pointed dissection in P_i(s,n): the sorted beginnings of its
/// diagonals and a bit string of length n-1 with exactly i ones.
struct PsiCode {
  std::vector<int> a;
  std::vector<std::uint8_t> eps;

  friend bool operator==(const PsiCode&, const PsiCode&) = default;
};

/// Throws InvalidInput unless `code` is a well-formed code for (s, n).
void check_psi_code(int s, int n, const PsiCode& code);

/// Encodes by repeatedly cutting s boundary vertices off after the first
/// beginning whose cyclic successor is at least s+1 positions away.
/// Throws InvalidInput for an invalid pointed dissection.
PsiCode psi_encode(const PointedDissection& pd);

/// Inverse of psi_encode; total on well-formed codes.
PointedDissection psi_decode(int s, int n, const PsiCode& code);

/// Every well-formed code for (s, n) with i ones, a-sequences in
/// lexicographic order, then bit strings in lexicographic order.
std::vector<PsiCode> enumerate_psi_codes(int s, int n, int i);

}  // namespace ncdissect
