#include "ncdissect/verify.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "ncdissect/dissection.hpp"
#include "ncdissect/errors.hpp"
#include "ncdissect/pairings.hpp"
#include "ncdissect/psi.hpp"
#include "ncdissect/spiders.hpp"

namespace ncdissect {

namespace {

using Clock = std::chrono::steady_clock;

std::string params_of(int s, int n) {
  return "s=" + std::to_string(s) + " n=" + std::to_string(n);
}

std::string params_of(int s, int n, int i) {
  return params_of(s, n) + " i=" + std::to_string(i);
}

class Recorder {
 public:
  explicit Recorder(const VerifyOptions& options) : options_(options) {}

  template <typename Body>
  void count(const std::string& family, const std::string& params, Body&& body) {
    run(family, params, false, std::forward<Body>(body));
  }

  template <typename Body>
  void identity(const std::string& family, const std::string& params, Body&& body) {
    run(family, params, true, std::forward<Body>(body));
  }

  VerifyReport take() { return std::move(report_); }

 private:
  // body() returns {expected, observed}. Exceptions count as failures.
  template <typename Body>
  void run(const std::string& family, const std::string& params, bool identity, Body&& body) {
    CheckResult row{family, params, identity, 0, 0, false, 0};
    const auto start = Clock::now();
    try {
      auto [expected, observed] = body();
      row.expected = expected;
      row.observed = observed;
      if (options_.inject_fault && *options_.inject_fault == family) row.expected += 1;
      row.pass = row.expected == row.observed;
    } catch (const std::exception&) {
      row.observed = -1;
      row.pass = false;
    }
    row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    report_.checks.push_back(std::move(row));
  }

  const VerifyOptions& options_;
  VerifyReport report_;
};

using Pair = std::pair<BigCount, BigCount>;

void dissection_families(Recorder& rec, int s, int n) {
  for (int i = 0; i < n; ++i) {
    rec.count("dissection-count", params_of(s, n, i), [&] {
      BigCount seen = 0;
      for_each_dissection(s, n, i, [&](const Dissection&) { ++seen; });
      return Pair{q_count({s, n, i}), seen};
    });
    rec.count("pointed-count", params_of(s, n, i), [&] {
      BigCount seen = 0;
      for_each_pointed(s, n, i, [&](const PointedDissection&) { ++seen; });
      return Pair{p_count({s, n, i}), seen};
    });
  }

  rec.identity("beginning-single-valued", params_of(s, n), [&] {
    BigCount tried = 0;
    BigCount good = 0;
    for (int i = 0; i < n; ++i) {
      for_each_pointed(s, n, i, [&](const PointedDissection& pd) {
        const auto& base = pd.base.vertices;
        for (const auto& diag : pd.dissection.diagonals) {
          ++tried;
          // Endpoint x qualifies when the base lies on the arc ending at x.
          const bool at_w = std::all_of(base.begin(), base.end(),
                                        [&](int v) { return diag.u <= v && v <= diag.w; });
          const bool at_u = std::all_of(base.begin(), base.end(),
                                        [&](int v) { return v <= diag.u || v >= diag.w; });
          if (at_w != at_u && diagonal_beginning(pd, diag) == (at_w ? diag.w : diag.u)) ++good;
        }
      });
    }
    return Pair{tried, good};
  });

  rec.identity("psi-roundtrip-pointed", params_of(s, n), [&] {
    BigCount tried = 0;
    BigCount good = 0;
    for (int i = 0; i < n; ++i) {
      for_each_pointed(s, n, i, [&](const PointedDissection& pd) {
        ++tried;
        if (psi_decode(s, n, psi_encode(pd)) == pd) ++good;
      });
    }
    return Pair{tried, good};
  });

  rec.identity("psi-roundtrip-codes", params_of(s, n), [&] {
    BigCount tried = 0;
    BigCount good = 0;
    for (int i = 0; i < n; ++i) {
      for (const auto& code : enumerate_psi_codes(s, n, i)) {
        ++tried;
        const auto pd = psi_decode(s, n, code);
        if (validate(pd).ok() && static_cast<int>(pd.dissection.diagonals.size()) == i &&
            psi_encode(pd) == code) {
          ++good;
        }
      }
    }
    return Pair{tried, good};
  });
}

void spider_families(Recorder& rec, int s, int n, const VerifyOptions& options) {
  rec.count("disc-count", params_of(s, n),
            [&] { return Pair{fuss_count(s, n), enumerate_disc(s, n).size()}; });
  rec.count("annular-count", params_of(s, n),
            [&] { return Pair{binomial(s * n, n), enumerate_annular(s, n).size()}; });

  rec.identity("legs-roundtrip", params_of(s, n), [&] {
    BigCount tried = 0;
    BigCount good = 0;
    for (const auto& ac : enumerate_annular(s, n)) {
      ++tried;
      if (legs_decode(s, n, first_legs(ac)) == ac) ++good;
    }
    std::vector<int> legs;
    auto grow = [&](auto&& self, int low) -> void {
      if (static_cast<int>(legs.size()) == n) {
        ++tried;
        if (first_legs(legs_decode(s, n, legs)) == legs) ++good;
        return;
      }
      for (int v = low; v <= s * n; ++v) {
        legs.push_back(v);
        self(self, v + 1);
        legs.pop_back();
      }
    };
    grow(grow, 1);
    return Pair{tried, good};
  });

  rec.identity("forget-hole-fibers", params_of(s, n), [&] {
    std::map<SpiderCollection, int> fiber;
    for (const auto& ac : enumerate_annular(s, n)) ++fiber[forget_hole(ac)];
    BigCount good = 0;
    for (const auto& [base, size] : fiber) {
      if (size == (s - 1) * n + 1) ++good;
    }
    return Pair{fuss_count(s, n), good};
  });

  rec.count("pairing-count", params_of(s, n),
            [&] { return Pair{fuss_count(s, n), enumerate_pairings(s, n).size()}; });

  rec.identity("phi-roundtrip", params_of(s, n), [&] {
    BigCount tried = 0;
    BigCount good = 0;
    for (const auto& p : enumerate_pairings(s, n)) {
      ++tried;
      if (phi_inverse(phi_forward(p)) == p) ++good;
    }
    for (const auto& c : enumerate_disc(s, n)) {
      ++tried;
      if (phi_forward(phi_inverse(c)) == c) ++good;
    }
    return Pair{tried, good};
  });

  if (s * n > options.oracle_max_vertices) return;
  const PartialCountLimits limits{options.oracle_max_vertices};

  rec.identity("completable-criterion", params_of(s, n), [&] {
    BigCount tried = 0;
    BigCount good = 0;
    for (int i = 0; i <= n; ++i) {
      for (const auto& p : enumerate_partials(s, n, i)) {
        ++tried;
        if (completable(p) == completable_brute_force(p)) ++good;
      }
    }
    return Pair{tried, good};
  });

  for (int i = 0; i <= n; ++i) {
    rec.count("partial-count-disc", params_of(s, n, i),
              [&] { return Pair{d_count({s, n, i}), count_partials(s, n, i, false, limits)}; });
    rec.count("partial-count-annular", params_of(s, n, i),
              [&] { return Pair{a_count({s, n, i}), count_partials(s, n, i, true, limits)}; });
    rec.count("partial-count-brute-force", params_of(s, n, i), [&] {
      return Pair{count_partials(s, n, i, true, limits) + count_partials(s, n, i, false, limits),
                  count_partials_brute_force(s, n, i, true, limits) +
                      count_partials_brute_force(s, n, i, false, limits)};
    });
  }
}

void arithmetic_families(Recorder& rec, const VerifyOptions& options) {
  for (int s = 1; s <= options.arithmetic_max_s; ++s) {
    rec.identity("divisibility", "s=" + std::to_string(s), [&] {
      BigCount tried = 0;
      BigCount good = 0;
      for (int n = 1; n <= options.arithmetic_max_n; ++n) {
        for (int i = 0; i <= n; ++i) {
          if (i <= n - 1) {
            ++tried;
            const BigCount numerator = binomial(s * n + i + 1, i) * binomial(n - 1, i);
            if (numerator % (i + 1) == 0 && p_count({s, n, i}) == (i + 1) * q_count({s, n, i})) {
              ++good;
            }
          }
          ++tried;
          const BigCount numerator = a_count({s, n, i});
          if (numerator % (i * (s - 1) + 1) == 0) ++good;
        }
      }
      return Pair{tried, good};
    });
  }
  for (int s = 2; s <= options.arithmetic_max_s; ++s) {
    rec.identity("fuss-identity", "s=" + std::to_string(s), [&] {
      BigCount tried = 0;
      BigCount good = 0;
      for (int n = 1; n <= options.arithmetic_max_n; ++n) {
        ++tried;
        const BigCount f = fuss_count(s, n);
        if (d_count({s, n, n}) == f && q_count({s - 1, n, n - 1}) == f) ++good;
      }
      return Pair{tried, good};
    });
  }
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> VerifyReport::families() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (std::find(out.begin(), out.end(), c.family) == out.end()) out.push_back(c.family);
  }
  return out;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.family << " [" << c.parameters << "] "
        << (c.identity ? "identity " : "count ") << "expected=" << c.expected
        << " observed=" << c.observed << '\n';
  }
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.pass ? 0 : 1;
  out << checks.size() << " checks in " << families().size() << " families, " << failed
      << " failed\n";
  return out.str();
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    rows.push_back({{"family", c.family},
                    {"parameters", c.parameters},
                    {"expected", c.identity ? std::string("identity") : c.expected.str()},
                    {"tried", c.expected.str()},
                    {"observed", c.observed.str()},
                    {"pass", c.pass},
                    {"seconds", c.seconds}});
  }
  return {{"pass", passed()}, {"checks", std::move(rows)}};
}

VerifyReport run_verify(const VerifyOptions& options) {
  Recorder rec(options);
  for (int s = 1; s <= options.max_s; ++s) {
    for (int n = 1; n <= options.max_n; ++n) dissection_families(rec, s, n);
  }
  for (int s = 2; s <= options.max_s; ++s) {
    for (int n = 1; n <= options.max_n; ++n) spider_families(rec, s, n, options);
  }
  arithmetic_families(rec, options);
  return rec.take();
}

}  // namespace ncdissect
