#include "fibtri/delannoy.hpp"

#include <array>
#include <stdexcept>

namespace fibtri {

namespace {

enum Step { kStart = 0, kE = 1, kN = 2, kD = 3 };

Int delannoy_dp(long n, bool restricted) {
  if (n < 0) throw std::invalid_argument("delannoy: n must be >= 0");
  // count[x][y][last]
  std::vector<std::vector<std::array<Int, 4>>> count(
      n + 1, std::vector<std::array<Int, 4>>(n + 1));
  count[0][0][kStart] = 1;
  for (long x = 0; x <= n; ++x) {
    for (long y = 0; y <= n; ++y) {
      for (int last = 0; last < 4; ++last) {
        const Int& c = count[x][y][last];
        if (c == 0) continue;
        // E is forbidden from a diagonal point that was entered by E.
        if (x < n && !(restricted && last == kE && x == y))
          count[x + 1][y][kE] += c;
        if (y < n) count[x][y + 1][kN] += c;
        if (x < n && y < n) count[x + 1][y + 1][kD] += c;
      }
    }
  }
  Int total = 0;
  for (int last = 0; last < 4; ++last) total += count[n][n][last];
  return total;
}

void enumerate_from(long x, long y, long n, int last, Int& acc) {
  if (x == n && y == n) {
    acc += 1;
    return;
  }
  if (x < n && !(last == kE && x == y)) enumerate_from(x + 1, y, n, kE, acc);
  if (y < n) enumerate_from(x, y + 1, n, kN, acc);
  if (x < n && y < n) enumerate_from(x + 1, y + 1, n, kD, acc);
}

}  // namespace

Int count_restricted_delannoy(long n) { return delannoy_dp(n, true); }

Int count_delannoy(long n) { return delannoy_dp(n, false); }

Int enumerate_restricted_delannoy(long n) {
  if (n < 0) throw std::invalid_argument("delannoy: n must be >= 0");
  if (n > 7)
    throw std::invalid_argument("enumerate_restricted_delannoy: n > 7");
  Int acc = 0;
  enumerate_from(0, 0, n, kStart, acc);
  return acc;
}

IdentityCheck check_hirschhorn(const ValueTable& ev, long n_max) {
  if (2 * n_max + 1 > ev.max_row)
    throw std::out_of_range("check_hirschhorn: even table too small");
  IdentityCheck chk{"HIRSCHHORN", "n=0..N"};
  for (long n = 0; n <= n_max; ++n)
    chk.require_eq({n, 2 * n + 1}, count_restricted_delannoy(n),
                   even_lookup(ev, n, 2 * n + 1));
  return chk;
}

}  // namespace fibtri
