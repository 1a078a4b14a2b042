#pragma once

#include "fibtri/identities.hpp"

namespace fibtri {

// Delannoy paths (0,0) -> (n,n) with steps E=(1,0), N=(0,1), D=(1,1) that
// never cross the diagonal horizontally: the subpath
// (m-1,m) -> (m,m) -> (m+1,m) (an E step onto the diagonal immediately
// followed by another E step) is forbidden. Dynamic programming over
// (position, last step).
Int count_restricted_delannoy(long n);

// Unrestricted central Delannoy count (sanity oracle).
Int count_delannoy(long n);

// Exhaustive path generation with pattern filtering; throws for n > 7.
Int enumerate_restricted_delannoy(long n);

// count_restricted_delannoy(n) == d_n(2n+1) for 0 <= n <= n_max.
// Requires the even table built to row 2*n_max+1.
IdentityCheck check_hirschhorn(const ValueTable& ev, long n_max);

}  // namespace fibtri
