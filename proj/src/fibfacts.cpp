#include "fibtri/fibfacts.hpp"

#include <stdexcept>

namespace fibtri {

const Int& FibSequence::at(long n) {
  if (n < 1) throw std::invalid_argument("fib: index must be >= 1");
  while (static_cast<long>(memo_.size()) < n)
    memo_.push_back(memo_[memo_.size() - 1] + memo_[memo_.size() - 2]);
  return memo_[n - 1];
}

Int fib(long n) {
  thread_local FibSequence seq;
  return seq.at(n);
}

namespace {

Int pow2(long e) {
  Int x = 1;
  x <<= e;
  return x;
}

}  // namespace

Int even_partition_sum(const ValueTable& tbl, long t) {
  if (t < 0 || t > tbl.max_row)
    throw std::out_of_range("even_partition_sum: row out of range");
  Int acc = 0;
  for (long i = 0; 2 * i < t; ++i)
    acc += pow2(t - 2 * i - 1) * even_lookup(tbl, i, t);
  acc *= 3;
  if (t % 2 == 0) acc += even_lookup(tbl, t / 2, t);
  return acc;
}

Int odd_partition_sum(const ValueTable& tbl, long t) {
  if (t < 0 || t > tbl.max_row)
    throw std::out_of_range("odd_partition_sum: row out of range");
  Int acc = 0;
  for (long i = 0; 2 * i <= t; ++i)
    acc += pow2(t - 2 * i) * odd_lookup_prime(tbl, i, t);
  for (long i = 0; 2 * i <= t - 3; ++i)
    acc += pow2(t - 2 * i - 3) * odd_lookup_double(tbl, i, t);
  return acc;
}

}  // namespace fibtri
