#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ncdissect {

using BigCount = boost::multiprecision::cpp_int;

struct CountParams {
  int s = 1;
  int n = 1;
  int i = 0;
};

/// C(m, k); zero when k < 0 or k > m.
BigCount binomial(int m, int k);

/// num / den, throwing InternalInvariantError when the remainder is nonzero.
BigCount exact_divide(const BigCount& num, const BigCount& den);

/// Pointed dissections of an (sn+2)-gon by i diagonals: C(sn+i+1, i) * C(n-1, i).
BigCount p_count(const CountParams& params);

/// Dissections of an (sn+2)-gon by i diagonals into (sj+2)-gons:
/// p_count / (i+1).
BigCount q_count(const CountParams& params);

/// Fuss number C(sn, n) / ((s-1)n + 1).
BigCount fuss_count(int s, int n);

/// Completable i-element annular spider collections:
/// C(sn, i) * C(n + (s-2)i, n - i). Reduces to C(sn, i) * C(n, i) when s = 2
/// or i = n; for s >= 3 and 0 < i < n that shorter form is wrong.
BigCount a_count(const CountParams& params);

/// Completable i-element disc spider collections: a_count / (i(s-1) + 1).
BigCount d_count(const CountParams& params);

}  // namespace ncdissect
