#include <doctest.h>

#include "fibtri/identities.hpp"

using namespace fibtri;

namespace {

struct Tables {
  ValueTable ev = ValueTable::even(61);
  ValueTable od = ValueTable::odd(61);
};

const Tables& tables() {
  static Tables t;
  return t;
}

}  // namespace

TEST_CASE("theorem worked examples") {
  const auto& [ev, od] = tables();
  // (1) at (2,6): d'_2(6) = d_2(6) - d_1(5)
  CHECK(odd_lookup_prime(od, 2, 6) ==
        even_lookup(ev, 2, 6) - even_lookup(ev, 1, 5));
  CHECK(odd_lookup_prime(od, 2, 6) == 13);
  // (2) at (1,6): d''_1(6) = d_2(6) - d_2(5)
  CHECK(odd_lookup_double(od, 1, 6) ==
        even_lookup(ev, 2, 6) - even_lookup(ev, 2, 5));
  CHECK(odd_lookup_double(od, 1, 6) == 6);
  // (5) at (3,7): d_3(6) = d'_3(7) - d''_1(6) = 35 - 6
  CHECK(even_lookup(ev, 3, 6) ==
        odd_lookup_prime(od, 3, 7) - odd_lookup_double(od, 1, 6));
  CHECK(even_lookup(ev, 3, 6) == 29);
}

TEST_CASE("theorem suites pass with zero counterexamples") {
  const auto& [ev, od] = tables();
  auto checks = check_theorem(ev, od, 60);
  REQUIRE(checks.size() == 5);
  for (const auto& c : checks) {
    INFO(c.id);
    CHECK(c.pass);
    CHECK(c.counterexamples.empty());
  }
  // (1) and (2) are equivalent: both pass on the full window.
  CHECK(checks[0].pass == checks[1].pass);
}

TEST_CASE("knight moves reconstruct the even pylon") {
  const auto& [ev, od] = tables();
  CHECK(knight_move(od, 3) == 29);
  CHECK(knight_move(od, 1) == 2);
  const long expected[] = {2, 7, 29, 130, 611};
  for (long i = 1; i <= 5; ++i) {
    CHECK(knight_move(od, i) == expected[i - 1]);
    CHECK(knight_move(od, i) == even_lookup(ev, i, 2 * i));
  }
  CHECK_THROWS_AS(knight_move(od, 0), std::out_of_range);
}

TEST_CASE("corollary 3 with N and N' reformulations") {
  const auto& [ev, od] = tables();
  // C3a at (1,6): 6 = 35 - 2*17 + 5
  CHECK(odd_lookup_double(od, 1, 6) ==
        odd_lookup_prime(od, 3, 7) - 2 * odd_lookup_prime(od, 3, 6) +
            odd_lookup_prime(od, 3, 5));
  // C3b at (2,6): 13 = d''_2(7) - 2 d''_1(6) + d''_0(5) = 24 - 12 + 1
  CHECK(odd_lookup_prime(od, 2, 6) ==
        odd_lookup_double(od, 2, 7) - 2 * odd_lookup_double(od, 1, 6) +
            odd_lookup_double(od, 0, 5));
  auto checks = check_corollary3(od, 60);
  REQUIRE(checks.size() == 6);
  for (const auto& c : checks) {
    INFO(c.id);
    CHECK(c.pass);
  }
}

TEST_CASE("the printed two-layer Nb rule is wrong where the corrected one holds") {
  const auto& od = tables().od;
  auto dd = [&](long i, long t) { return odd_lookup_double(od, i, t); };
  // As printed, with last term d''_i(t-1): fails at i=2, t=6.
  Int printed = 2 * dd(0, 6) - dd(1, 7) - dd(1, 6) + dd(2, 5);
  CHECK(printed != odd_lookup_prime(od, 2, 6));
  // Corrected last term d''_i(t+1).
  Int corrected = 2 * dd(0, 6) - dd(1, 7) - dd(1, 6) + dd(2, 7);
  CHECK(corrected == odd_lookup_prime(od, 2, 6));
}

TEST_CASE("corollary 4 summations") {
  const auto& [ev, od] = tables();
  // (b) at (2,6): d'_0(4)+d'_1(5)+d'_2(6) = 1+4+13 = 18 = d_2(6)
  CHECK(odd_lookup_prime(od, 0, 4) + odd_lookup_prime(od, 1, 5) +
            odd_lookup_prime(od, 2, 6) ==
        even_lookup(ev, 2, 6));
  // (a) at (1,5): d_0(4)+d_1(5) = 6 = d''_1(6)
  CHECK(even_lookup(ev, 0, 4) + even_lookup(ev, 1, 5) ==
        odd_lookup_double(od, 1, 6));
  auto checks = check_corollary4(ev, od, 60);
  REQUIRE(checks.size() == 3);
  for (const auto& c : checks) {
    INFO(c.id);
    CHECK(c.pass);
  }
}

TEST_CASE("delta and shift operators") {
  std::vector<Int> u{1, 1, 2, 3, 5, 8, 13, 21};
  auto d = delta(u);
  REQUIRE(d.size() == 7);
  CHECK(d[0] == 0);
  CHECK(d[6] == 8);
  auto s = shift(u);
  REQUIRE(s.size() == 7);
  CHECK(s[0] == 1);
  CHECK(delta(shift(u)) == std::vector<Int>{1, 1, 2, 3, 5, 8});
  CHECK(delta(std::vector<Int>{4, 4, 4}) == std::vector<Int>{0, 0});
  CHECK_THROWS_AS(delta(std::vector<Int>{1}), std::invalid_argument);
  CHECK_THROWS_AS(shift(std::vector<Int>{}), std::invalid_argument);
}

TEST_CASE("operator identities tie the triangles together") {
  const auto& [ev, od] = tables();
  for (long i = 0; i <= 5; ++i)
    for (long t = 0; t <= 50; ++t) {
      // E d''_i = Delta d_{i+1}
      CHECK(odd_lookup_double(od, i, t + 1) ==
            even_lookup(ev, i + 1, t + 1) - even_lookup(ev, i + 1, t));
      // d_i = Delta d'_{i+1}, valid from t = 2i+1
      if (t >= 2 * i + 1)
        CHECK(even_lookup(ev, i, t) ==
              odd_lookup_prime(od, i + 1, t + 1) -
                  odd_lookup_prime(od, i + 1, t));
    }
}

TEST_CASE("south-east difference table of the odd triangle") {
  const auto& od = tables().od;
  auto table = se_difference_table(od, 12);
  CHECK(table[1] == std::vector<Int>{1});
  CHECK(table[5] == std::vector<Int>{1, 3, 5, 1, 0});
  CHECK(table[7] == std::vector<Int>{1, 5, 14, 22, 7, 1, 0});
  CHECK(table[9] == std::vector<Int>{1, 7, 27, 67, 102, 40, 9, 1, 0});
  CHECK(table[12] ==
        std::vector<Int>{1, 10, 54, 197, 517, 955, 995, 289, 73, 12, 1, 0});
  auto big = se_difference_table(od, 60);
  for (long t = 1; t <= 60; ++t)
    for (const auto& v : big[t]) CHECK(v >= 0);
}
