#include "ncdissect/numbers.hpp"

#include <string>

#include "ncdissect/errors.hpp"

namespace ncdissect {

namespace {

void require_base(int s, int n) {
  if (s < 1 || n < 1) {
    throw DomainError("require s >= 1 and n >= 1 (got s=" + std::to_string(s) +
                      ", n=" + std::to_string(n) + ")");
  }
}

// Dissection counts: 0 <= i <= n-1.
void require_dissection_params(const CountParams& p) {
  require_base(p.s, p.n);
  if (p.i < 0 || p.i > p.n - 1) {
    throw DomainError("require 0 <= i <= n-1 (got i=" + std::to_string(p.i) +
                      ", n=" + std::to_string(p.n) + ")");
  }
}

// Spider partial counts: 0 <= i <= n.
void require_spider_params(const CountParams& p) {
  require_base(p.s, p.n);
  if (p.i < 0 || p.i > p.n) {
    throw DomainError("require 0 <= i <= n (got i=" + std::to_string(p.i) +
                      ", n=" + std::to_string(p.n) + ")");
  }
}

}  // namespace

BigCount binomial(int m, int k) {
  if (m < 0) throw DomainError("binomial requires m >= 0");
  if (k < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  BigCount result = 1;
  // After step j, result == C(m - k + j, j); each division is exact.
  for (int j = 1; j <= k; ++j) {
    result *= m - k + j;
    result /= j;
  }
  return result;
}

BigCount exact_divide(const BigCount& num, const BigCount& den) {
  if (den == 0) throw InternalInvariantError("division by zero");
  BigCount quotient;
  BigCount remainder;
  boost::multiprecision::divide_qr(num, den, quotient, remainder);
  if (remainder != 0) {
    throw InternalInvariantError(num.str() + " is not divisible by " + den.str());
  }
  return quotient;
}

BigCount p_count(const CountParams& params) {
  require_dissection_params(params);
  const auto [s, n, i] = params;
  return binomial(s * n + i + 1, i) * binomial(n - 1, i);
}

BigCount q_count(const CountParams& params) {
  return exact_divide(p_count(params), params.i + 1);
}

BigCount fuss_count(int s, int n) {
  require_base(s, n);
  return exact_divide(binomial(s * n, n), (s - 1) * n + 1);
}

BigCount a_count(const CountParams& params) {
  require_spider_params(params);
  const auto [s, n, i] = params;
  return binomial(s * n, i) * binomial(n + (s - 2) * i, n - i);
}

BigCount d_count(const CountParams& params) {
  const BigCount annular = a_count(params);
  return exact_divide(annular, params.i * (params.s - 1) + 1);
}

}  // namespace ncdissect
