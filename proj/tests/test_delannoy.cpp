#include <doctest.h>

#include "fibtri/delannoy.hpp"

using namespace fibtri;

TEST_CASE("restricted central Delannoy anchors") {
  const long expected[] = {1, 3, 12, 53, 247, 1192};
  for (long n = 0; n <= 5; ++n) CHECK(count_restricted_delannoy(n) == expected[n]);
}

TEST_CASE("unrestricted central Delannoy anchors") {
  const long expected[] = {1, 3, 13, 63, 321};
  for (long n = 0; n <= 4; ++n) CHECK(count_delannoy(n) == expected[n]);
}

TEST_CASE("dynamic programming agrees with exhaustive enumeration") {
  for (long n = 0; n <= 6; ++n)
    CHECK(count_restricted_delannoy(n) == enumerate_restricted_delannoy(n));
  CHECK_THROWS_AS(enumerate_restricted_delannoy(8), std::invalid_argument);
}

TEST_CASE("restriction only removes paths") {
  for (long n = 0; n <= 10; ++n) {
    CHECK(count_restricted_delannoy(n) <= count_delannoy(n));
    if (n >= 2) CHECK(count_restricted_delannoy(n) < count_delannoy(n));
  }
}

TEST_CASE("restricted counts sit on the even pylon-adjacent diagonal") {
  ValueTable ev = ValueTable::even(21);
  for (long n = 0; n <= 10; ++n)
    CHECK(count_restricted_delannoy(n) == even_lookup(ev, n, 2 * n + 1));
  auto check = check_hirschhorn(ev, 10);
  CHECK(check.pass);
  CHECK(check.counterexamples.empty());
}
