#pragma once

#include <vector>

#include "fibtri/quiver.hpp"

namespace fibtri {

enum class TriangleKind { Even, Odd };

// Even triangle quiver: vertices (i,t) with 0 <= 2i <= t <= max_row,
// projectives (0,t), tau(i,t) = (i-1,t-2), south-east arrows for 2i < t,
// valued (3,1) when ending on the pylon (i,2i) and (2,1) otherwise.
QuiverSpec build_even_quiver(long max_row);

// Odd triangle quiver: vertices (0,0) and (i,t) with 0 <= i < t <= max_row,
// projectives (0,t) and (i,i+1) for i >= 2, tau(i,t) = (i-1,t-2); pylons
// {(i,2i)} and {(i,2i-1)}; south-east arrows valued (1,1) pylon-to-pylon,
// (2,1) for 2i < t, (1,2) otherwise.
QuiverSpec build_odd_quiver(long max_row);

// Dense per-row value storage with convention-aware lookups. Even rows hold
// d_0(t)..d_{t/2}(t); odd rows hold the full row d'_0(t)..d'_{t-1}(t) (row 0
// holds the single origin value).
class ValueTable {
 public:
  TriangleKind kind;
  long max_row = 0;
  std::vector<std::vector<Int>> rows;

  // Built through the generic mesh engine with all projective values 1.
  static ValueTable even(long max_row);
  static ValueTable odd(long max_row);

  const Int& stored(long i, long t) const;
};

// d_i(t) extended by d_i(t) = d_{t-i}(t) and d_i(t) = 0 for i < 0.
Int even_lookup(const ValueTable& tbl, long i, long t);
// d'_i(t), zero outside 0 <= i < t (row 0: d'_0(0) = 1).
Int odd_lookup_prime(const ValueTable& tbl, long i, long t);
// d''_i(t) = d'_{t-i-1}(t); zero for i < 0 except d''_{-1}(0) = 1.
Int odd_lookup_double(const ValueTable& tbl, long i, long t);

// Hook-sum oracles (no mesh recurrence involved).
// Even: g_i(t) = g_i(t-1) + sum_{j<i} g_j(t-i+j), with the pylon case
// g_i(2i) = g_{i-1}(2i-1) + sum_{j<i} g_j(i+j).
Int even_hook(const ValueTable& tbl, long i, long t);
// Odd, left of the first pylon (2i <= t).
Int odd_hook_prime(const ValueTable& tbl, long i, long t);
// Odd, strictly right of the first pylon in ''-indexing (t >= 2i+3).
Int odd_hook_double(const ValueTable& tbl, long i, long t);

// Closed O(1)-per-entry recurrences, derived from the valuation rules and
// validated against the mesh engine before use as a fast path.
std::vector<std::vector<Int>> even_closed_rows(long max_row);
std::vector<std::vector<Int>> odd_closed_rows(long max_row);

// Notation concordance with the a-/u-indexed sequences.
struct Concordance {
  long s = 0;
  long j = 0;
};
Concordance concordance_even(long i, long t);        // d_i(t) = a_s[j]
Coord concordance_even_inverse(long s, long j);      // throws on inconsistency
Concordance concordance_odd(long i, long t, bool dbl);  // d'/d'' = u_s[j]

}  // namespace fibtri
