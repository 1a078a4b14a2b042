#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fibtri/render.hpp"

using namespace fibtri;

TEST_CASE("format names parse") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("pretty") == OutputFormat::Pretty);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("bfile") == OutputFormat::Bfile);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("pretty rows") {
  ValueTable od = ValueTable::odd(3);
  CHECK(render_triangle(od, OutputFormat::Pretty) == "1\n1\n1 1\n1 2 1\n");
}

TEST_CASE("csv output and round-trip") {
  ValueTable ev = ValueTable::even(2);
  std::string csv = render_triangle(ev, OutputFormat::Csv);
  CHECK(csv == "0,0,1\n1,0,1\n2,0,1\n2,1,2\n");

  ValueTable big = ValueTable::even(15);
  auto triples = parse_triangle_csv(render_triangle(big, OutputFormat::Csv));
  size_t k = 0;
  for (long t = 0; t <= 15; ++t)
    for (size_t i = 0; i < big.rows[t].size(); ++i, ++k) {
      REQUIRE(k < triples.size());
      auto [tt, ii, v] = triples[k];
      CHECK(tt == t);
      CHECK(ii == (long)i);
      CHECK(v == big.rows[t][i]);
    }
  CHECK(k == triples.size());
}

TEST_CASE("bfile output is deterministic across rebuilds") {
  std::string a = render_triangle(ValueTable::odd(20), OutputFormat::Bfile);
  std::string b = render_triangle(ValueTable::odd(20), OutputFormat::Bfile);
  CHECK(a == b);
  CHECK(a.substr(0, 8) == "1 1\n2 1\n");
}

TEST_CASE("json output parses back") {
  ValueTable od = ValueTable::odd(6);
  auto j = nlohmann::json::parse(render_triangle(od, OutputFormat::Json));
  CHECK(j["kind"] == "odd");
  CHECK(j["max_row"] == 6);
  const auto& entries = j["entries"];
  REQUIRE(entries.is_array());
  size_t k = 0;
  for (long t = 0; t <= 6; ++t)
    for (size_t i = 0; i < od.rows[t].size(); ++i, ++k) {
      CHECK(entries[k]["t"] == t);
      CHECK(entries[k]["i"] == (long)i);
      CHECK(entries[k]["value"] == od.rows[t][i].get_str());
    }
  CHECK(entries.size() == k);
}
