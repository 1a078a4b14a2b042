#pragma once

#include "fibtri/triangles.hpp"

namespace fibtri {

struct Counterexample {
  Coord where;
  Int lhs;
  Int rhs;
};

struct IdentityCheck {
  std::string id;
  std::string range;
  bool pass = true;
  std::vector<Counterexample> counterexamples;

  void require_eq(Coord where, Int lhs, Int rhs);
};

// Theorem rules T1..T5 relating the two triangles. (1),(2) are swept over a
// widened window i in [-3, t+3] to exercise the zero/symmetry conventions;
// (3),(4) over i <= (t-2)/2; (5) over i <= t/2; all for 1 <= t <= t_max.
std::vector<IdentityCheck> check_theorem(const ValueTable& ev,
                                         const ValueTable& od, long t_max);

// d_i(2i) reconstructed from the odd triangle: d'_i(2i+1) - d''_{i-2}(2i).
Int knight_move(const ValueTable& od, long i);

// Corollary 3 in both directions plus the two-layer N and N' reformulations.
// Requires od built to t_max+1 (the rules reach one row below t_max).
std::vector<IdentityCheck> check_corollary3(const ValueTable& od, long t_max);

// Corollary 4 summation identities (a), (b) and the symmetry consequence of
// (b). Requires od built to t_max+1.
std::vector<IdentityCheck> check_corollary4(const ValueTable& ev,
                                            const ValueTable& od, long t_max);

std::vector<Int> delta(const std::vector<Int>& u);  // u(t+1) - u(t)
std::vector<Int> shift(const std::vector<Int>& u);  // u(t+1)

// Row t of the result holds the differences g(i,t) - g(i-1,t-1) for
// i = 0..t-1, where g is the full odd row (d' across both pylons) and
// g(-1,.) = 0. Row 0 is empty.
std::vector<std::vector<Int>> se_difference_table(const ValueTable& od,
                                                  long t_max);

}  // namespace fibtri
