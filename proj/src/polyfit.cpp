#include "fibtri/polyfit.hpp"

#include <stdexcept>

namespace fibtri {

Int binomial(long t, long k) {
  if (k < 0) throw std::invalid_argument("binomial: k must be >= 0");
  Int num = 1;
  for (long j = 0; j < k; ++j) num *= Int(t - j);
  Int fact = 1;
  for (long j = 2; j <= k; ++j) fact *= j;
  Int out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
  return out;
}

Int evaluate_binomial_poly(const BinomialPoly& p, long t) {
  Int acc = 0;
  for (size_t k = 0; k < p.coeffs.size(); ++k)
    acc += p.coeffs[k] * binomial(t, static_cast<long>(k));
  return acc;
}

BinomialPoly binomial_fit(const std::vector<std::pair<long, Int>>& samples) {
  const long n = static_cast<long>(samples.size());
  if (n < 2) throw std::invalid_argument("binomial_fit: need >= 2 samples");
  for (long k = 1; k < n; ++k)
    if (samples[k].first != samples[k - 1].first + 1)
      throw std::invalid_argument("binomial_fit: samples must be consecutive");

  const long t0 = samples[0].first;
  // Forward-difference table; newton[k] = Delta^k at t0.
  std::vector<Int> row;
  row.reserve(n);
  for (const auto& s : samples) row.push_back(s.second);
  std::vector<Int> newton;
  newton.push_back(row[0]);
  long degree = row[0] != 0 ? 0 : -1;
  for (long k = 1; k < n; ++k) {
    for (long j = 0; j + 1 < static_cast<long>(row.size()); ++j)
      row[j] = row[j + 1] - row[j];
    row.pop_back();
    newton.push_back(row[0]);
    if (row[0] != 0) degree = k;
  }

  BinomialPoly p;
  p.t_min = t0;
  p.degree_verified = degree < n - 1;
  if (degree < 0) return p;  // zero polynomial

  // Evaluate the Newton form at t = 0..degree, then re-express in C(t,k):
  // the binomial-basis coefficients are the forward differences at 0.
  std::vector<Int> vals;
  for (long t = 0; t <= degree; ++t) {
    Int acc = 0;
    for (long k = 0; k <= degree; ++k)
      acc += newton[k] * binomial(t - t0, k);
    vals.push_back(acc);
  }
  p.coeffs.resize(degree + 1);
  for (long k = 0; k <= degree; ++k) {
    p.coeffs[k] = vals[0];
    for (long j = 0; j + 1 < static_cast<long>(vals.size()); ++j)
      vals[j] = vals[j + 1] - vals[j];
    vals.pop_back();
  }
  return p;
}

namespace {

Int family_value(const ValueTable& tbl, DiagonalFamily f, long i, long t) {
  switch (f) {
    case DiagonalFamily::D:
      return even_lookup(tbl, i, t);
    case DiagonalFamily::DPrime:
      return odd_lookup_prime(tbl, i, t);
    case DiagonalFamily::DDouble:
      return odd_lookup_double(tbl, i, t);
  }
  throw std::logic_error("unreachable");
}

long family_domain_start(DiagonalFamily f, long i) {
  switch (f) {
    case DiagonalFamily::D:
      return 2 * i;  // first vertex of the diagonal
    case DiagonalFamily::DPrime:
      return i == 0 ? 0 : i + 1;
    case DiagonalFamily::DDouble:
      return i + 1;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

BinomialPoly diagonal_polynomial(const ValueTable& tbl, DiagonalFamily family,
                                 long i, long window_end) {
  if (i < 0) throw std::invalid_argument("diagonal_polynomial: i must be >= 0");
  const long start = family_domain_start(family, i);
  const long win_lo = window_end - (i + 1);  // i+2 samples
  if (window_end > tbl.max_row || win_lo < start)
    throw std::invalid_argument(
        "diagonal_polynomial: window does not hold i+2 valid samples");

  std::vector<std::pair<long, Int>> samples;
  for (long t = win_lo; t <= window_end; ++t)
    samples.emplace_back(t, family_value(tbl, family, i, t));
  BinomialPoly p = binomial_fit(samples);
  if (p.degree() != i)
    throw std::domain_error("diagonal_polynomial: fitted degree " +
                            std::to_string(p.degree()) + " != " +
                            std::to_string(i));
  if (p.coeffs.back() != 1)
    throw std::domain_error("diagonal_polynomial: fit is not monic");

  long t_min = win_lo;
  while (t_min - 1 >= start &&
         family_value(tbl, family, i, t_min - 1) ==
             evaluate_binomial_poly(p, t_min - 1))
    --t_min;
  p.t_min = t_min;
  for (long t = window_end + 1; t <= tbl.max_row; ++t)
    if (family_value(tbl, family, i, t) != evaluate_binomial_poly(p, t))
      throw std::domain_error(
          "diagonal_polynomial: fit disagrees with table at t=" +
          std::to_string(t));
  return p;
}

std::string binomial_string(const BinomialPoly& p) {
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    const Int& c = p.coeffs[k];
    if (c == 0) continue;
    const bool first = out.empty();
    std::string mag = Int(abs(c)).get_str();
    out += (c < 0) ? "-" : (first ? "" : "+");
    if (k == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag;
      out += "C(t," + std::to_string(k) + ")";
    }
  }
  return out.empty() ? "0" : out;
}

std::string monomial_string(const BinomialPoly& p) {
  const long deg = p.degree();
  if (deg < 0) return "0";
  // Expand sum_k c_k * t(t-1)...(t-k+1)/k! into rational monomial coeffs.
  std::vector<mpq_class> mono(deg + 1, mpq_class(0));
  for (long k = 0; k <= deg; ++k) {
    std::vector<Int> ff{1};  // falling factorial, ascending powers
    for (long j = 0; j < k; ++j) {
      std::vector<Int> next(ff.size() + 1, Int(0));
      for (size_t m = 0; m < ff.size(); ++m) {
        next[m + 1] += ff[m];        // * t
        next[m] += ff[m] * Int(-j);  // * (-j)
      }
      ff = std::move(next);
    }
    Int fact = 1;
    for (long j = 2; j <= k; ++j) fact *= j;
    mpq_class scale(p.coeffs[k], fact);
    scale.canonicalize();
    for (size_t m = 0; m < ff.size(); ++m) mono[m] += scale * ff[m];
  }
  Int den = 1;
  for (auto& q : mono)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  std::string body;
  for (long m = deg; m >= 0; --m) {
    mpq_class scaled = mono[m] * den;
    Int c(scaled.get_num());  // exact integer after scaling by the lcm
    if (c == 0) continue;
    const bool first = body.empty();
    std::string mag = Int(abs(c)).get_str();
    body += (c < 0) ? "-" : (first ? "" : "+");
    if (m == 0) {
      body += mag;
    } else {
      if (mag != "1") body += mag;
      body += (m == 1) ? "t" : "t^" + std::to_string(m);
    }
  }
  if (body.empty()) body = "0";
  if (den == 1) return body;
  return "(1/" + den.get_str() + ")(" + body + ")";
}

}  // namespace fibtri
