#include "fibtri/identities.hpp"

#include <stdexcept>

namespace fibtri {

void IdentityCheck::require_eq(Coord where, Int lhs, Int rhs) {
  if (lhs != rhs) {
    pass = false;
    counterexamples.push_back({where, std::move(lhs), std::move(rhs)});
  }
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<IdentityCheck> check_theorem(const ValueTable& ev,
                                         const ValueTable& od, long t_max) {
  if (t_max > ev.max_row || t_max > od.max_row)
    throw std::out_of_range("check_theorem: tables too small");
  IdentityCheck t1{"T1", "t=1..N, i=-3..t+3"};
  IdentityCheck t2{"T2", "t=1..N, i=-3..t+3"};
  IdentityCheck t3{"T3", "t=1..N, i=-3..(t-2)/2"};
  IdentityCheck t4{"T4", "t=1..N, i=-3..(t-2)/2"};
  IdentityCheck t5{"T5", "t=1..N, i=-3..t/2"};
  for (long t = 1; t <= t_max; ++t) {
    for (long i = -3; i <= t + 3; ++i) {
      t1.require_eq({i, t}, odd_lookup_prime(od, i, t),
                    even_lookup(ev, i, t) - even_lookup(ev, i - 1, t - 1));
      t2.require_eq({i, t}, odd_lookup_double(od, i, t),
                    even_lookup(ev, i + 1, t) - even_lookup(ev, i + 1, t - 1));
    }
    for (long i = -3; i <= floor_div(t - 2, 2); ++i) {
      t3.require_eq({i, t}, even_lookup(ev, i, t - 1),
                    odd_lookup_prime(od, i + 1, t) -
                        odd_lookup_prime(od, i + 1, t - 1));
      t4.require_eq({i, t}, even_lookup(ev, i, t - 1),
                    odd_lookup_double(od, i, t) -
                        odd_lookup_double(od, i - 1, t - 1));
    }
    for (long i = -3; i <= floor_div(t, 2); ++i) {
      t5.require_eq({i, t}, even_lookup(ev, i, t - 1),
                    odd_lookup_prime(od, i, t) -
                        odd_lookup_double(od, i - 2, t - 1));
    }
  }
  return {t1, t2, t3, t4, t5};
}

Int knight_move(const ValueTable& od, long i) {
  if (i < 1 || 2 * i + 1 > od.max_row)
    throw std::out_of_range("knight_move: index out of range");
  return odd_lookup_prime(od, i, 2 * i + 1) -
         odd_lookup_double(od, i - 2, 2 * i);
}

std::vector<IdentityCheck> check_corollary3(const ValueTable& od, long t_max) {
  if (t_max + 1 > od.max_row)
    throw std::out_of_range("check_corollary3: table must reach t_max+1");
  auto dp = [&od](long i, long t) { return odd_lookup_prime(od, i, t); };
  auto dd = [&od](long i, long t) { return odd_lookup_double(od, i, t); };

  IdentityCheck c3a{"C3a", "t=4..N, i=-2..(t-4)/2"};
  IdentityCheck c3b{"C3b", "t=1..N, i=-2..(t-1)/2"};
  IdentityCheck na{"Na", "t=4..N, i=-2..(t-4)/2"};
  // Corrected two-layer rule: the printed version's last term d''_i(t-1)
  // must read d''_i(t+1) (see the verification-report notes).
  IdentityCheck nb{"Nb", "t=1..N, i=-2..(t-1)/2"};
  IdentityCheck npa{"N'a", "t=5..N, i=-2..(t-5)/2"};
  IdentityCheck npb{"N'b", "t=2..N, i=-2..(t-2)/2"};

  for (long t = 1; t <= t_max; ++t) {
    for (long i = -2; i <= floor_div(t - 4, 2); ++i) {
      if (t >= 4)
        c3a.require_eq({i, t}, dd(i, t),
                       dp(i + 2, t + 1) - 2 * dp(i + 2, t) + dp(i + 2, t - 1));
      if (t >= 4)
        na.require_eq({i, t}, dd(i, t),
                      2 * dp(i + 1, t) - dp(i + 1, t - 1) - dp(i + 2, t) +
                          dp(i + 2, t - 1));
    }
    for (long i = -2; i <= floor_div(t - 5, 2); ++i)
      if (t >= 5)
        npa.require_eq({i, t}, dd(i, t),
                       dp(i + 2, t + 1) + dp(i + 3, t) - dp(i + 3, t + 1));
    for (long i = -2; i <= floor_div(t - 1, 2); ++i) {
      c3b.require_eq({i, t}, dp(i, t),
                     dd(i, t + 1) - 2 * dd(i - 1, t) + dd(i - 2, t - 1));
      nb.require_eq({i, t}, dp(i, t),
                    2 * dd(i - 2, t) - dd(i - 1, t + 1) - dd(i - 1, t) +
                        dd(i, t + 1));
    }
    for (long i = -2; i <= floor_div(t - 2, 2); ++i)
      if (t >= 2)
        npb.require_eq({i, t}, dp(i, t),
                       dd(i - 2, t - 1) + dd(i, t) - dd(i - 1, t - 1));
  }
  return {c3a, c3b, na, nb, npa, npb};
}

std::vector<IdentityCheck> check_corollary4(const ValueTable& ev,
                                            const ValueTable& od, long t_max) {
  if (t_max > ev.max_row || t_max + 1 > od.max_row)
    throw std::out_of_range("check_corollary4: tables too small");
  IdentityCheck c4a{"C4a", "t=1..N, i=0..(t-1)/2"};
  IdentityCheck c4b{"C4b", "t=0..N, i=0..t"};
  IdentityCheck c4bs{"C4b-sym", "t=0..N, i=0..t"};
  for (long t = 0; t <= t_max; ++t) {
    for (long i = 0; t >= 1 && i <= floor_div(t - 1, 2); ++i) {
      Int acc = 0;
      for (long j = 0; j <= i; ++j) acc += even_lookup(ev, j, t - i + j);
      c4a.require_eq({i, t}, acc, odd_lookup_double(od, i, t + 1));
    }
    for (long i = 0; i <= t; ++i) {
      Int lhs = 0;
      for (long j = 0; j <= i; ++j) lhs += odd_lookup_prime(od, j, t - i + j);
      c4b.require_eq({i, t}, lhs, even_lookup(ev, i, t));
      Int mirror = 0;
      for (long j = 0; j <= t - i; ++j)
        mirror += odd_lookup_prime(od, j, i + j);
      c4bs.require_eq({i, t}, lhs, mirror);
    }
  }
  return {c4a, c4b, c4bs};
}

std::vector<Int> delta(const std::vector<Int>& u) {
  if (u.size() < 2) throw std::invalid_argument("delta: need >= 2 terms");
  std::vector<Int> out;
  out.reserve(u.size() - 1);
  for (size_t k = 0; k + 1 < u.size(); ++k) out.push_back(u[k + 1] - u[k]);
  return out;
}

std::vector<Int> shift(const std::vector<Int>& u) {
  if (u.empty()) throw std::invalid_argument("shift: empty sequence");
  return std::vector<Int>(u.begin() + 1, u.end());
}

std::vector<std::vector<Int>> se_difference_table(const ValueTable& od,
                                                  long t_max) {
  if (t_max < 1 || t_max > od.max_row)
    throw std::out_of_range("se_difference_table: bad t_max");
  std::vector<std::vector<Int>> out(t_max + 1);
  for (long t = 1; t <= t_max; ++t) {
    out[t].reserve(t);
    for (long i = 0; i < t; ++i)
      out[t].push_back(odd_lookup_prime(od, i, t) -
                       odd_lookup_prime(od, i - 1, t - 1));
  }
  return out;
}

}  // namespace fibtri
