#include "doctest.h"
#include "ncdissect/errors.hpp"
#include "ncdissect/numbers.hpp"
#include "ncdissect/psi.hpp"

using namespace ncdissect;

namespace {

PointedDissection pointed(int s, int n, std::vector<std::pair<int, int>> diags, std::vector<int> base) {
  return PointedDissection{make_dissection(s, n, std::move(diags)), Region{std::move(base)}};
}

PsiCode code(std::vector<int> a, std::vector<std::uint8_t> eps) { return PsiCode{std::move(a), std::move(eps)}; }

}  // namespace

TEST_CASE("psi_encode worked examples") {
  CHECK(psi_encode(pointed(1, 1, {}, {1, 2, 3})) == code({}, {}));
  CHECK(psi_encode(pointed(1, 4, {{1, 4}}, {1, 4, 5, 6})) == code({1}, {0, 1, 0}));
  CHECK(psi_encode(pointed(1, 4, {{1, 3}, {4, 6}}, {1, 3, 4, 6})) == code({1, 4}, {1, 1, 0}));
}

TEST_CASE("psi_decode worked examples") {
  CHECK(psi_decode(1, 2, code({1}, {1})) == pointed(1, 2, {{1, 3}}, {1, 3, 4}));
  CHECK(psi_decode(1, 4, code({1}, {0, 1, 0})) == pointed(1, 4, {{1, 4}}, {1, 4, 5, 6}));
  for (int s = 1; s <= 3; ++s) {
    const auto pd = psi_decode(s, 4, code({}, {0, 0, 0}));
    CHECK(pd.dissection.diagonals.empty());
    CHECK(pd.base.vertices.size() == static_cast<std::size_t>(s * 4 + 2));
  }
}

TEST_CASE("malformed codes are rejected") {
  CHECK_THROWS_AS(psi_decode(1, 4, code({1}, {0, 1})), InvalidInput);         // eps too short
  CHECK_THROWS_AS(psi_decode(1, 4, code({1, 2}, {0, 1, 0})), InvalidInput);   // ones != |a|
  CHECK_THROWS_AS(psi_decode(1, 4, code({7}, {0, 1, 0})), InvalidInput);      // a out of range
  CHECK_THROWS_AS(psi_decode(1, 4, code({3, 2}, {1, 1, 0})), InvalidInput);   // decreasing
  CHECK_THROWS_AS(psi_decode(1, 4, code({1}, {0, 2, 0})), InvalidInput);      // not a bit
  CHECK_THROWS_AS(psi_encode(pointed(1, 4, {{1, 4}}, {1, 2, 3})), InvalidInput);
}

TEST_CASE("code enumeration size") {
  for (int s = 1; s <= 3; ++s) {
    for (int n = 1; n <= 5; ++n) {
      for (int i = 0; i < n; ++i) {
        CHECK(p_count({s, n, i}) == enumerate_psi_codes(s, n, i).size());
      }
    }
  }
}

TEST_CASE("a-sequence is the beginnings sequence") {
  for_each_pointed(2, 4, 2, [](const PointedDissection& pd) {
    CHECK(psi_encode(pd).a == beginnings_sequence(pd));
  });
}

TEST_CASE("psi round trips over all pointed dissections and all codes") {
  for (int s = 1; s <= 3; ++s) {
    for (int n = 1; n <= 5; ++n) {
      for (int i = 0; i < n; ++i) {
        CAPTURE(s);
        CAPTURE(n);
        CAPTURE(i);
        std::size_t pointed_count = 0;
        for_each_pointed(s, n, i, [&](const PointedDissection& pd) {
          ++pointed_count;
          const PsiCode c = psi_encode(pd);
          CHECK(std::count(c.eps.begin(), c.eps.end(), 1) == i);
          CHECK(psi_decode(s, n, c) == pd);
        });
        std::size_t codes = 0;
        for (const auto& c : enumerate_psi_codes(s, n, i)) {
          ++codes;
          const auto pd = psi_decode(s, n, c);
          CHECK(validate(pd).ok());
          CHECK(pd.dissection.diagonals.size() == static_cast<std::size_t>(i));
          CHECK(psi_encode(pd) == c);
        }
        CHECK(codes == pointed_count);
      }
    }
  }
}
