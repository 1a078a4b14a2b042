#pragma once

#include "fibtri/triangles.hpp"

namespace fibtri {

// Memoized Fibonacci sequence, f_1 = f_2 = 1. Index 0 is rejected.
class FibSequence {
 public:
  const Int& at(long n);

 private:
  std::vector<Int> memo_{1, 1};  // f_1, f_2
};

// Convenience accessor over a private sequence.
Int fib(long n);

// 3 * sum_{0 <= i < t/2} 2^(t-2i-1) d_i(t)  +  d_{t/2}(t)   (= f_{2t+2});
// the pylon term is dropped when t is odd.
Int even_partition_sum(const ValueTable& tbl, long t);

// sum_{i=0}^{floor(t/2)} 2^(t-2i) d'_i(t)
//   + sum_{i=0}^{floor((t-3)/2)} 2^(t-2i-3) d''_i(t)   (= f_{2t+1}).
Int odd_partition_sum(const ValueTable& tbl, long t);

}  // namespace fibtri
