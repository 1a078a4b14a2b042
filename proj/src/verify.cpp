#include "fibtri/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "fibtri/delannoy.hpp"
#include "fibtri/fibfacts.hpp"
#include "fibtri/polyfit.hpp"
#include "fibtri/render.hpp"

namespace fibtri {

bool RunReport::all_pass() const {
  for (const auto& s : suites)
    if (!s.pass) return false;
  return true;
}

long RunReport::passed() const {
  long n = 0;
  for (const auto& s : suites) n += s.pass ? 1 : 0;
  return n;
}

long RunReport::failed() const {
  return static_cast<long>(suites.size()) - passed();
}

namespace {

using Rows = std::vector<std::vector<long>>;

const Rows kGoldenEven = {
    {1},
    {1},
    {1, 2},
    {1, 3},
    {1, 4, 7},
    {1, 5, 12},
    {1, 6, 18, 29},
    {1, 7, 25, 53},
    {1, 8, 33, 85, 130},
    {1, 9, 42, 126, 247},
    {1, 10, 52, 177, 414, 611},
    {1, 11, 63, 239, 642, 1192},
    {1, 12, 75, 313, 943, 2062, 2965},
};

const Rows kGoldenOdd = {
    {1},
    {1},
    {1, 1},
    {1, 2, 1},
    {1, 3, 4, 1},
    {1, 4, 8, 5, 1},
    {1, 5, 13, 17, 6, 1},
    {1, 6, 19, 35, 24, 7, 1},
    {1, 7, 26, 60, 77, 32, 8, 1},
    {1, 8, 34, 93, 162, 117, 41, 9, 1},
};

struct SuiteRunner {
  RunReport& report;

  void run(const std::string& name, const std::function<void(SuiteResult&)>& fn) {
    SuiteResult r;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      fn(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    report.suites.push_back(std::move(r));
  }
};

void fail(SuiteResult& r, const std::string& msg) {
  r.pass = false;
  if (r.detail.empty()) r.detail = msg;
}

void check_identities(SuiteResult& r, const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks) {
    if (c.pass) continue;
    const auto& ce = c.counterexamples.front();
    fail(r, c.id + " fails at " + to_string(ce.where) + ": " +
                ce.lhs.get_str() + " != " + ce.rhs.get_str() + " (+" +
                std::to_string(c.counterexamples.size() - 1) + " more)");
  }
}

}  // namespace

RunReport run_verify(long t_max, long n_max_delannoy) {
  RunReport report;
  SuiteRunner run{report};

  const long ev_rows = std::max(t_max + 1, 2 * n_max_delannoy + 1);
  const long od_rows = t_max + 1;
  const ValueTable ev = ValueTable::even(ev_rows);
  const ValueTable od = ValueTable::odd(od_rows);

  run.run("spec-validation", [&](SuiteResult& r) {
    for (auto* q : {&build_even_quiver, &build_odd_quiver}) {
      auto spec = q(std::min<long>(t_max + 1, 60));
      auto violations = validate_spec(spec);
      if (!violations.empty())
        fail(r, violations.front().rule + " at " +
                    to_string(violations.front().where));
    }
  });

  run.run("triple-agreement-even", [&](SuiteResult& r) {
    auto closed = even_closed_rows(t_max);
    for (long t = 0; t <= t_max && r.pass; ++t)
      for (long i = 0; 2 * i <= t; ++i) {
        const Int& mesh = ev.stored(i, t);
        if (mesh != closed[t][i])
          fail(r, "closed recurrence differs at " + to_string({i, t}));
        else if (t >= 1 && mesh != even_hook(ev, i, t))
          fail(r, "hook oracle differs at " + to_string({i, t}));
      }
  });

  run.run("triple-agreement-odd", [&](SuiteResult& r) {
    auto closed = odd_closed_rows(t_max);
    for (long t = 1; t <= t_max && r.pass; ++t)
      for (long i = 0; i < t; ++i) {
        const Int& mesh = od.stored(i, t);
        if (mesh != closed[t][i]) {
          fail(r, "closed recurrence differs at " + to_string({i, t}));
          continue;
        }
        Int hook = (2 * i <= t) ? odd_hook_prime(od, i, t)
                                : odd_hook_double(od, t - 1 - i, t);
        if (mesh != hook)
          fail(r, "hook oracle differs at " + to_string({i, t}));
      }
  });

  run.run("golden-rows", [&](SuiteResult& r) {
    auto check = [&](const ValueTable& tbl, const Rows& golden,
                     const char* which) {
      for (long t = 0; t <= std::min<long>(tbl.max_row,
                                           golden.size() - 1);
           ++t) {
        if (tbl.rows[t].size() != golden[t].size()) {
          fail(r, std::string(which) + " row " + std::to_string(t) +
                      " has wrong length");
          continue;
        }
        for (size_t i = 0; i < golden[t].size(); ++i)
          if (tbl.rows[t][i] != golden[t][i])
            fail(r, std::string(which) + " row " + std::to_string(t) +
                        " entry " + std::to_string(i) + " mismatch");
      }
    };
    check(ev, kGoldenEven, "even");
    check(od, kGoldenOdd, "odd");
  });

  run.run("partition-even", [&](SuiteResult& r) {
    for (long t = 0; t <= t_max; ++t)
      if (even_partition_sum(ev, t) != fib(2 * t + 2)) {
        fail(r, "mismatch at t=" + std::to_string(t));
        break;
      }
    if (t_max >= 6 && (even_partition_sum(ev, 5) != 144 ||
                       even_partition_sum(ev, 6) != 377))
      fail(r, "worked-line anchors t=5,6 mismatch");
  });

  run.run("partition-odd", [&](SuiteResult& r) {
    for (long t = 0; t <= t_max; ++t)
      if (odd_partition_sum(od, t) != fib(2 * t + 1)) {
        fail(r, "mismatch at t=" + std::to_string(t));
        break;
      }
    if (t_max >= 6 &&
        (odd_partition_sum(od, 5) != 89 || odd_partition_sum(od, 6) != 233))
      fail(r, "worked-line anchors t=5,6 mismatch");
  });

  run.run("theorem", [&](SuiteResult& r) {
    if (t_max < 1) return;
    auto checks = check_theorem(ev, od, t_max);
    check_identities(r, checks);
    // T1 and T2 are equivalent; their pass ranges must coincide.
    if (checks[0].pass != checks[1].pass)
      fail(r, "T1/T2 equivalence broken");
  });

  run.run("knight-move", [&](SuiteResult& r) {
    const std::vector<long> expected{2, 7, 29, 130, 611};
    for (long i = 1; i <= 5 && 2 * i + 1 <= od.max_row; ++i) {
      Int k = knight_move(od, i);
      if (k != expected[i - 1])
        fail(r, "knight sequence mismatch at i=" + std::to_string(i));
      if (2 * i <= ev.max_row && k != even_lookup(ev, i, 2 * i))
        fail(r, "knight vs pylon mismatch at i=" + std::to_string(i));
    }
  });

  run.run("corollary3", [&](SuiteResult& r) {
    if (t_max < 1) return;
    check_identities(r, check_corollary3(od, t_max));
  });

  run.run("corollary4", [&](SuiteResult& r) {
    if (t_max < 1) return;
    check_identities(r, check_corollary4(ev, od, t_max));
  });

  run.run("se-difference-table", [&](SuiteResult& r) {
    if (t_max < 1) return;
    auto table = se_difference_table(od, t_max);
    auto expect = [&](long t, const std::vector<long>& want) {
      if (t > t_max) return;
      if (table[t].size() != want.size()) {
        fail(r, "row " + std::to_string(t) + " has wrong length");
        return;
      }
      for (size_t k = 0; k < want.size(); ++k)
        if (table[t][k] != want[k])
          fail(r, "row " + std::to_string(t) + " mismatch");
    };
    expect(1, {1});
    expect(5, {1, 3, 5, 1, 0});
    expect(7, {1, 5, 14, 22, 7, 1, 0});
    expect(9, {1, 7, 27, 67, 102, 40, 9, 1, 0});
    expect(12, {1, 10, 54, 197, 517, 955, 995, 289, 73, 12, 1, 0});
    for (long t = 1; t <= t_max; ++t)
      for (const auto& v : table[t])
        if (v < 0) fail(r, "negative entry in row " + std::to_string(t));
  });

  run.run("operators", [&](SuiteResult& r) {
    // Delta E f = f.
    std::vector<Int> f;
    for (long n = 1; n <= 502; ++n) f.push_back(fib(n));
    auto def = delta(shift(f));
    for (size_t k = 0; k < def.size() && k < 500; ++k)
      if (def[k] != f[k]) fail(r, "Delta E f != f");
    const long up = std::min<long>(50, od.max_row - 1);
    for (long i = 0; i <= 5; ++i) {
      for (long t = 0; t <= up; ++t) {
        // E d''_i = Delta d_{i+1}.
        if (t + 1 <= ev.max_row &&
            odd_lookup_double(od, i, t + 1) !=
                even_lookup(ev, i + 1, t + 1) - even_lookup(ev, i + 1, t))
          fail(r, "E d''_i != Delta d_{i+1} at i=" + std::to_string(i) +
                      ", t=" + std::to_string(t));
        // d_i = Delta d'_{i+1}, valid from t = 2i+1 on.
        if (t >= 2 * i + 1 && t <= ev.max_row &&
            even_lookup(ev, i, t) != odd_lookup_prime(od, i + 1, t + 1) -
                                         odd_lookup_prime(od, i + 1, t))
          fail(r, "d_i != Delta d'_{i+1} at i=" + std::to_string(i) +
                      ", t=" + std::to_string(t));
      }
    }
  });

  run.run("polynomial-regression", [&](SuiteResult& r) {
    if (t_max < 14) return;
    const long window_end = std::min<long>(t_max, 30);
    using F = DiagonalFamily;
    struct Expect {
      F fam;
      long i;
      std::vector<long> coeffs;  // ascending over C(t,k)
      long t_min;
    };
    const std::vector<Expect> expects = {
        {F::D, 1, {0, 1}, 2},
        {F::D, 3, {-3, -3, 2, 1}, 6},
        {F::DPrime, 0, {1}, 0},
        {F::DPrime, 1, {-1, 1}, 2},
        {F::DPrime, 2, {-2, 0, 1}, 3},
        {F::DPrime, 3, {0, -3, 1, 1}, 5},
        {F::DDouble, 0, {1}, 1},
        {F::DDouble, 1, {0, 1}, 4},
        {F::DDouble, 2, {-4, 1, 1}, 6},
        {F::DDouble, 3, {-3, -4, 2, 1}, 8},
    };
    for (const auto& e : expects) {
      const ValueTable& tbl = (e.fam == F::D) ? ev : od;
      auto p = diagonal_polynomial(tbl, e.fam, e.i, window_end);
      if (p.degree() != e.i || p.coeffs.back() != 1) {
        fail(r, "fit not monic of degree i");
        continue;
      }
      bool same = p.coeffs.size() == e.coeffs.size();
      for (size_t k = 0; same && k < e.coeffs.size(); ++k)
        same = p.coeffs[k] == e.coeffs[k];
      if (!same)
        fail(r, "coefficient mismatch for family/index " +
                    std::to_string(e.i));
      if (p.t_min != e.t_min)
        fail(r, "t_min mismatch for family/index " + std::to_string(e.i));
    }
    // The d_2 fit contradicts the printed closed form; the fit is
    // authoritative (see notes).
    auto d2 = diagonal_polynomial(ev, F::D, 2, window_end);
    if (d2.coeffs != std::vector<Int>{-3, 1, 1})
      fail(r, "d_2 fit changed");
    BinomialPoly printed_d2;
    printed_d2.coeffs = {-3, 0, 1};  // the printed (1/2)(t^2-t-6)
    if (evaluate_binomial_poly(printed_d2, 4) == even_lookup(ev, 2, 4))
      fail(r, "printed d_2 unexpectedly matches the triangle");
  });

  run.run("delannoy", [&](SuiteResult& r) {
    for (long n = 0; n <= 6; ++n)
      if (count_restricted_delannoy(n) != enumerate_restricted_delannoy(n))
        fail(r, "DP != enumeration at n=" + std::to_string(n));
    const std::vector<long> central{1, 3, 13, 63, 321};
    for (long n = 0; n <= 4; ++n)
      if (count_delannoy(n) != central[n])
        fail(r, "unrestricted sanity mismatch at n=" + std::to_string(n));
    const std::vector<long> restricted{1, 3, 12, 53, 247, 1192};
    for (long n = 0; n <= 5; ++n)
      if (count_restricted_delannoy(n) != restricted[n])
        fail(r, "restricted anchor mismatch at n=" + std::to_string(n));
    const long n_max = std::min(n_max_delannoy, (ev.max_row - 1) / 2);
    check_identities(r, {check_hirschhorn(ev, n_max)});
  });

  run.run("io-roundtrip", [&](SuiteResult& r) {
    const long rows = std::min<long>(t_max, 20);
    const ValueTable a = ValueTable::even(rows);
    const ValueTable b = ValueTable::even(rows);
    auto triples = parse_triangle_csv(render_triangle(a, OutputFormat::Csv));
    size_t k = 0;
    for (long t = 0; t <= rows; ++t)
      for (size_t i = 0; i < a.rows[t].size(); ++i, ++k) {
        auto [pt, pi, pv] = triples[k];
        if (pt != t || pi != static_cast<long>(i) || pv != a.rows[t][i])
          fail(r, "csv round-trip mismatch");
      }
    if (k != triples.size()) fail(r, "csv round-trip length mismatch");
    if (render_triangle(a, OutputFormat::Bfile) !=
        render_triangle(b, OutputFormat::Bfile))
      fail(r, "bfile output not deterministic");
  });

  report.notes = {
      "odd boxed partition formula: implemented in the corrected form "
      "(second sum with coefficient 2^(t-2i-3) up to i = floor((t-3)/2)); "
      "the printed form contradicts the worked t=5 and t=6 lines",
      "printed d_2 polynomial (1/2)(t^2-t-6) contradicts the triangle "
      "(gives 3 at t=4, table has 7); the fit C(t,2)+C(t,1)-3 is "
      "authoritative",
      "two-layer rule Nb: last term corrected to d''_i(t+1); the printed "
      "d''_i(t-1) fails numerically (e.g. i=2, t=6)",
  };
  return report;
}

std::string render_report(const RunReport& report) {
  std::ostringstream out;
  for (const auto& s : report.suites) {
    out << (s.pass ? "PASS" : "FAIL") << "  " << s.name;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "  (%.3fs)", s.seconds);
    out << buf;
    if (!s.detail.empty()) out << "  -- " << s.detail;
    out << "\n";
  }
  out << "suites: " << report.passed() << " passed, " << report.failed()
      << " failed\n";
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace fibtri
