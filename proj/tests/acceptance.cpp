// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Bounds and time limits are fixed here.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ncdissect/dissection.hpp"
#include "ncdissect/numbers.hpp"
#include "ncdissect/pairings.hpp"
#include "ncdissect/psi.hpp"
#include "ncdissect/spiders.hpp"

using namespace ncdissect;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string where(int s, int n, int i = -1) {
  std::string out = "s=" + std::to_string(s) + " n=" + std::to_string(n);
  if (i >= 0) out += " i=" + std::to_string(i);
  return out;
}

// Criterion 1: enumeration counts equal q_count; spot values.
Outcome formula_vs_oracle() {
  Outcome o;
  auto sweep = [&](int s, int n) {
    for (int i = 0; i < n; ++i) {
      BigCount seen = 0;
      for_each_dissection(s, n, i, [&](const Dissection&) { ++seen; });
      o.expect(seen == q_count({s, n, i}), "q mismatch at " + where(s, n, i));
    }
  };
  for (int s = 1; s <= 3; ++s) {
    for (int n = 1; n <= 5; ++n) sweep(s, n);
  }
  for (int n = 6; n <= 7; ++n) sweep(1, n);
  const std::array<int, 4> hexagon{1, 9, 21, 14};
  for (int i = 0; i < 4; ++i) {
    o.expect(enumerate_dissections(1, 4, i).size() == static_cast<std::size_t>(hexagon[i]),
             "q(1,4," + std::to_string(i) + ")");
  }
  o.expect(enumerate_dissections(1, 3, 2).size() == 5, "q(1,3,2) = 5");
  o.expect(fuss_count(3, 2) == 3 && enumerate_disc(3, 2).size() == 3, "f(3,2) = 3");
  return o;
}

// Criterion 2: both psi round trips, totality, |P_i| from the code count.
Outcome psi_bijection() {
  Outcome o;
  for (int s = 1; s <= 3; ++s) {
    for (int n = 1; n <= 5; ++n) {
      for (int i = 0; i < n; ++i) {
        BigCount pointed = 0;
        for_each_pointed(s, n, i, [&](const PointedDissection& pd) {
          ++pointed;
          o.expect(psi_decode(s, n, psi_encode(pd)) == pd, "decode(encode) at " + where(s, n, i));
        });
        const auto codes = enumerate_psi_codes(s, n, i);
        for (const auto& code : codes) {
          try {
            const auto pd = psi_decode(s, n, code);
            o.expect(validate(pd).ok() && pd.dissection.diagonals.size() == static_cast<std::size_t>(i),
                     "decode output invalid at " + where(s, n, i));
            o.expect(psi_encode(pd) == code, "encode(decode) at " + where(s, n, i));
          } catch (const std::exception& e) {
            o.expect(false, std::string("decode not total: ") + e.what());
          }
        }
        const BigCount expected = binomial(s * n + i + 1, i) * binomial(n - 1, i);
        o.expect(pointed == expected && BigCount(codes.size()) == expected,
                 "|P_i| at " + where(s, n, i));
      }
    }
  }
  o.expect(enumerate_pointed(1, 4, 3).size() == 56, "56 pointed triangulations of the hexagon");
  return o;
}

std::vector<std::pair<int, int>> spider_sizes() {
  std::vector<std::pair<int, int>> out;
  for (int s = 2; s <= 4; ++s) {
    for (int n = 1; n <= 4; ++n) out.emplace_back(s, n);
  }
  out.emplace_back(2, 5);
  out.emplace_back(2, 6);
  return out;
}

// Criterion 3: first-leg codec round trips; fibers of forget_hole.
Outcome legs_codec() {
  Outcome o;
  for (auto [s, n] : spider_sizes()) {
    const auto all = enumerate_annular(s, n);
    o.expect(BigCount(all.size()) == binomial(s * n, n), "|A| at " + where(s, n));
    for (const auto& ac : all) {
      o.expect(legs_decode(s, n, first_legs(ac)) == ac, "decode(first_legs) at " + where(s, n));
    }
    std::size_t sequences = 0;
    std::vector<int> legs;
    std::function<void(int)> grow = [&](int low) {
      if (static_cast<int>(legs.size()) == n) {
        ++sequences;
        o.expect(first_legs(legs_decode(s, n, legs)) == legs, "first_legs(decode) at " + where(s, n));
        return;
      }
      for (int v = low; v <= s * n; ++v) {
        legs.push_back(v);
        grow(v + 1);
        legs.pop_back();
      }
    };
    grow(1);
    o.expect(BigCount(sequences) == binomial(s * n, n), "leg sequence count at " + where(s, n));
    std::map<SpiderCollection, int> fiber;
    for (const auto& ac : all) ++fiber[forget_hole(ac)];
    for (const auto& [c, size] : fiber) {
      o.expect(size == (s - 1) * n + 1, "fiber size at " + where(s, n));
    }
    o.expect(BigCount(fiber.size()) == fuss_count(s, n), "|F| at " + where(s, n));
  }
  return o;
}

// Criterion 4: phi round trips; |F'| = f; Catalan at s = 2.
Outcome phi_bijection() {
  Outcome o;
  for (auto [s, n] : spider_sizes()) {
    const auto pairings = enumerate_pairings(s, n);
    const auto collections = enumerate_disc(s, n);
    o.expect(BigCount(pairings.size()) == fuss_count(s, n), "|F'| at " + where(s, n));
    for (const auto& p : pairings) {
      o.expect(phi_inverse(phi_forward(p)) == p, "phi_inverse(phi) at " + where(s, n));
    }
    for (const auto& c : collections) {
      o.expect(phi_forward(phi_inverse(c)) == c, "phi(phi_inverse) at " + where(s, n));
    }
  }
  const std::array<std::size_t, 6> catalan{1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    o.expect(enumerate_pairings(2, n).size() == catalan[n - 1], "Catalan at n=" + std::to_string(n));
  }
  return o;
}

// Criterion 5: partial collection counts and the completability criterion.
Outcome partial_collections() {
  Outcome o;
  for (int s = 2; s <= 3; ++s) {
    for (int n = 1; n <= 4; ++n) {
      for (int i = 0; i <= n; ++i) {
        o.expect(count_partials(s, n, i, true) == a_count({s, n, i}), "a at " + where(s, n, i));
        o.expect(count_partials(s, n, i, false) == d_count({s, n, i}), "d at " + where(s, n, i));
        o.expect(count_partials_brute_force(s, n, i, true) == a_count({s, n, i}),
                 "brute-force a at " + where(s, n, i));
        o.expect(count_partials_brute_force(s, n, i, false) == d_count({s, n, i}),
                 "brute-force d at " + where(s, n, i));
        for (const auto& p : enumerate_partials(s, n, i)) {
          o.expect(completable(p) == completable_brute_force(p), "criterion at " + where(s, n, i));
        }
      }
    }
  }
  o.expect(a_count({2, 2, 1}) == 8 && count_partials(2, 2, 1, true) == 8, "a(2,2,1) = 8");
  o.expect(d_count({2, 2, 1}) == 4 && count_partials(2, 2, 1, false) == 4, "d(2,2,1) = 4");
  return o;
}

// Criterion 6: exact divisibility and the Fuss identity.
Outcome arithmetic() {
  Outcome o;
  for (int s = 1; s <= 6; ++s) {
    for (int n = 1; n <= 30; ++n) {
      for (int i = 0; i <= n - 1; ++i) {
        const BigCount numerator = binomial(s * n + i + 1, i) * binomial(n - 1, i);
        o.expect(numerator % (i + 1) == 0, "(i+1) | p at " + where(s, n, i));
      }
      for (int i = 0; i <= n; ++i) {
        const BigCount numerator = a_count({s, n, i});
        o.expect(numerator % (i * (s - 1) + 1) == 0, "(i(s-1)+1) | a at " + where(s, n, i));
      }
      if (s >= 2) {
        const BigCount f = fuss_count(s, n);
        o.expect(d_count({s, n, n}) == f && q_count({s - 1, n, n - 1}) == f,
                 "Fuss identity at " + where(s, n));
      }
    }
  }
  return o;
}

struct Command {
  int code = -1;
  std::string out;
};

Command run(const std::string& args) {
  const std::string line = std::string(NCDISSECT_CLI) + " " + args + " 2>/dev/null";
  Command result;
  FILE* pipe = ::popen(line.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Criterion 7: verify exits 0; byte-stable enumerations matching golden
// files; stream line counts equal printed counts.
Outcome cli_contract() {
  Outcome o;
  const Command verify = run("verify");
  o.expect(verify.code == 0, "verify exited " + std::to_string(verify.code));

  struct Golden {
    std::string file;
    std::string enumerate;
    std::string count;
  };
  const std::vector<Golden> suite{
      {"dissections_s1_n3_i2", "dissections --s 1 --n 3 --i 2", "q --s 1 --n 3 --i 2"},
      {"dissections_s1_n4_i2", "dissections --s 1 --n 4 --i 2", "q --s 1 --n 4 --i 2"},
      {"dissections_s2_n2_i1", "dissections --s 2 --n 2 --i 1", "q --s 2 --n 2 --i 1"},
      {"dissections_s2_n4_i2", "dissections --s 2 --n 4 --i 2", "q --s 2 --n 4 --i 2"},
      {"pointed_s1_n2_i1", "pointed --s 1 --n 2 --i 1", "p --s 1 --n 2 --i 1"},
      {"pointed_s1_n4_i3", "pointed --s 1 --n 4 --i 3", "p --s 1 --n 4 --i 3"},
      {"pointed_s3_n3_i1", "pointed --s 3 --n 3 --i 1", "p --s 3 --n 3 --i 1"},
      {"spiders_s3_n2", "spiders --s 3 --n 2", "f --s 3 --n 2"},
      {"spiders_s2_n4", "spiders --s 2 --n 4", "f --s 2 --n 4"},
      {"annular_s2_n2", "annular --s 2 --n 2", "a --s 2 --n 2 --i 2"},
      {"annular_s3_n2", "annular --s 3 --n 2", "a --s 3 --n 2 --i 2"},
      {"pairings_s3_n2", "pairings --s 3 --n 2", "fprime --s 3 --n 2"},
      {"pairings_s2_n3", "pairings --s 2 --n 3", "f --s 2 --n 3"},
      {"pairings_s4_n3", "pairings --s 4 --n 3", "f --s 4 --n 3"},
  };
  for (const auto& g : suite) {
    const Command first = run("enumerate " + g.enumerate);
    const Command second = run("enumerate " + g.enumerate);
    const Command count = run("count " + g.count);
    o.expect(first.code == 0 && count.code == 0, g.file + ": command failed");
    o.expect(first.out == second.out, g.file + ": output not byte-stable");
    const auto lines = std::count(first.out.begin(), first.out.end(), '\n');
    o.expect(std::to_string(lines) + "\n" == count.out, g.file + ": line count != count");
    o.expect(first.out == read_file(std::string(NCDISSECT_GOLDEN_DIR) + "/" + g.file + ".jsonl"),
             g.file + ": differs from golden file");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double time_limit_seconds;  // 0 = none stated
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria{
      {"AC1 formula-vs-oracle dissection counts", 60, formula_vs_oracle},
      {"AC2 psi bijection round trips", 120, psi_bijection},
      {"AC3 first-leg codec and forgetful fibers", 0, legs_codec},
      {"AC4 phi bijection and |F'| = f", 0, phi_bijection},
      {"AC5 partial collections a_i / d_i", 0, partial_collections},
      {"AC6 divisibility and Fuss identity", 0, arithmetic},
      {"AC7 CLI contract", 0, cli_contract},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.time_limit_seconds > 0 && elapsed >= c.time_limit_seconds) {
      o.expect(false, "took " + std::to_string(elapsed) + " s");
    }
    std::printf("[%s] %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.name, elapsed,
                o.pass ? "" : ": ", o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
