#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fibtri/triangles.hpp"

namespace fibtri {

// Integer-valued polynomial in the binomial basis: sum_k coeffs[k] * C(t,k).
struct BinomialPoly {
  std::vector<Int> coeffs;  // c_0..c_k; empty means the zero polynomial
  long t_min = 0;           // agrees with the source data for all t >= t_min
  bool degree_verified = true;  // false if degree == samples-1 (unverifiable)

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

// C(t,k) by the falling-factorial product, exact for any integer t.
Int binomial(long t, long k);

Int evaluate_binomial_poly(const BinomialPoly& p, long t);

// Minimal-degree exact fit through consecutive-t samples via forward
// differences (Newton form), re-expressed in the C(t,k) basis.
BinomialPoly binomial_fit(const std::vector<std::pair<long, Int>>& samples);

enum class DiagonalFamily { D, DPrime, DDouble };

// Fits diagonal i of the given family on a window ending at window_end, then
// extends agreement backward to find t_min and forward to the table end.
// Throws std::domain_error if the fit is not monic of degree i or disagrees
// with the table anywhere in [t_min, max_row].
BinomialPoly diagonal_polynomial(const ValueTable& tbl, DiagonalFamily family,
                                 long i, long window_end);

// "C(t,2)+C(t,1)-4" style rendering.
std::string binomial_string(const BinomialPoly& p);
// "(1/2)(t^2+t-8)" style rendering with exact rational coefficients.
std::string monomial_string(const BinomialPoly& p);

}  // namespace fibtri
