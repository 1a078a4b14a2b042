#include <iostream>

#include <CLI11.hpp>

#include "fibtri/delannoy.hpp"
#include "fibtri/fibfacts.hpp"
#include "fibtri/polyfit.hpp"
#include "fibtri/render.hpp"
#include "fibtri/verify.hpp"

namespace {

using namespace fibtri;

TriangleKind parse_kind(const std::string& name) {
  if (name == "even") return TriangleKind::Even;
  if (name == "odd") return TriangleKind::Odd;
  throw std::invalid_argument("unknown kind: " + name);
}

DiagonalFamily parse_family(const std::string& name) {
  if (name == "d") return DiagonalFamily::D;
  if (name == "d'" || name == "dp" || name == "dprime")
    return DiagonalFamily::DPrime;
  if (name == "d''" || name == "dpp" || name == "ddouble")
    return DiagonalFamily::DDouble;
  throw std::invalid_argument("unknown family: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonacci partition triangles: exact tables and identity "
               "verification"};
  app.require_subcommand(1);

  std::string kind = "even";
  std::string family = "d";
  std::string format = "pretty";
  long rows = 12;
  long index = 0;
  long n = 0;

  auto* triangle = app.add_subcommand("triangle", "print triangle rows");
  triangle->add_option("--kind", kind, "even|odd");
  triangle->add_option("--rows,-t", rows, "highest row to print");
  triangle->add_option("--format", format, "pretty|csv|json|bfile");

  auto* verify = app.add_subcommand("verify", "run all verification suites");
  verify->add_option("--rows,-t", rows, "verify identities up to this row")
      ->default_val(100);
  verify->add_option("--n", n, "Delannoy/Hirschhorn bound")->default_val(12);

  auto* polyfit = app.add_subcommand("polyfit", "fit a diagonal polynomial");
  polyfit->add_option("--kind", kind, "even|odd");
  polyfit->add_option("--family", family, "d|d'|d''");
  polyfit->add_option("--index", index, "diagonal index i")->required();
  polyfit->add_option("--rows,-t", rows, "fit window end")->default_val(30);

  auto* delannoy = app.add_subcommand("delannoy",
                                      "count restricted Delannoy paths");
  delannoy->add_option("--n", n, "grid size")->required();

  auto* fibcmd = app.add_subcommand("fib", "print a Fibonacci number");
  fibcmd->add_option("--n", n, "index (1-based)")->required();

  auto* difftable = app.add_subcommand("difftable",
                                       "south-east difference table of the "
                                       "odd triangle");
  difftable->add_option("--rows,-t", rows, "highest target row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (triangle->parsed()) {
      TriangleKind k = parse_kind(kind);
      ValueTable tbl = (k == TriangleKind::Even) ? ValueTable::even(rows)
                                                 : ValueTable::odd(rows);
      std::cout << render_triangle(tbl, parse_format(format));
      return 0;
    }
    if (verify->parsed()) {
      RunReport report = run_verify(rows, n);
      std::cout << render_report(report);
      return report.all_pass() ? 0 : 1;
    }
    if (polyfit->parsed()) {
      TriangleKind k = parse_kind(kind);
      DiagonalFamily fam = parse_family(family);
      if ((fam == DiagonalFamily::D) != (k == TriangleKind::Even))
        throw std::invalid_argument("family " + family +
                                    " does not belong to the " + kind +
                                    " triangle");
      ValueTable tbl = (k == TriangleKind::Even) ? ValueTable::even(rows)
                                                 : ValueTable::odd(rows);
      BinomialPoly p = diagonal_polynomial(tbl, fam, index, rows);
      std::cout << binomial_string(p) << ", valid t>=" << p.t_min << "\n"
                << "expanded: " << monomial_string(p) << "\n";
      return 0;
    }
    if (delannoy->parsed()) {
      std::cout << count_restricted_delannoy(n).get_str() << "\n";
      return 0;
    }
    if (fibcmd->parsed()) {
      std::cout << fib(n).get_str() << "\n";
      return 0;
    }
    if (difftable->parsed()) {
      ValueTable od = ValueTable::odd(rows);
      auto table = se_difference_table(od, rows);
      for (long t = 1; t <= rows; ++t) {
        for (size_t k = 0; k < table[t].size(); ++k)
          std::cout << (k ? " " : "") << table[t][k].get_str();
        std::cout << "\n";
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
