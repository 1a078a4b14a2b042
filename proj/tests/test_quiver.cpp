#include <doctest.h>

#include <random>

#include "fibtri/triangles.hpp"

using namespace fibtri;

TEST_CASE("both triangle quivers validate cleanly") {
  CHECK(validate_spec(build_even_quiver(12)).empty());
  CHECK(validate_spec(build_odd_quiver(12)).empty());
  CHECK(validate_spec(build_even_quiver(0)).empty());
  CHECK(validate_spec(build_odd_quiver(0)).empty());
}

TEST_CASE("tau defined on a projective vertex is flagged") {
  QuiverSpec q = build_even_quiver(4);
  auto base_tau = q.tau;
  q.tau = [base_tau](Coord c) -> std::optional<Coord> {
    if (c == Coord{0, 2}) return Coord{0, 0};  // bogus: (0,2) is projective
    return base_tau(c);
  };
  auto violations = validate_spec(q);
  REQUIRE(!violations.empty());
  bool found = false;
  for (const auto& v : violations)
    if (v.rule == "tau defined on projective vertex" && v.where == Coord{0, 2})
      found = true;
  CHECK(found);
}

TEST_CASE("broken valuation is flagged") {
  QuiverSpec q = build_even_quiver(8);
  auto base = q.se_valuation;
  q.se_valuation = [base](Coord c) -> std::optional<Valuation> {
    auto v = base(c);
    if (v && c == Coord{1, 4}) return Valuation{7, 1};  // should be (2,1)
    return v;
  };
  CHECK(!validate_spec(q).empty());
}

TEST_CASE("sw_arrow_v_prime derives the south-west coefficient") {
  QuiverSpec ev = build_even_quiver(10);
  QuiverSpec od = build_odd_quiver(10);
  CHECK(sw_arrow_v_prime(ev, {1, 3}) == 1);
  CHECK(sw_arrow_v_prime(od, {2, 4}) == 1);  // mate (1,2)->(2,3) has (1,1)
  CHECK(sw_arrow_v_prime(od, {4, 6}) == 2);  // mate (3,4)->(4,5) has (1,2)
}

TEST_CASE("mesh_value matches the worked meshes") {
  QuiverSpec ev = build_even_quiver(10);
  QuiverSpec od = build_odd_quiver(10);
  std::map<Coord, Int> ones;
  for (long t = 0; t <= 10; ++t) ones[{0, t}] = 1;
  AdditiveTable g = evaluate_additive(ev, ones, 10);
  CHECK(mesh_value(ev, g, {1, 2}) == 2);   // pylon mesh: 3*1 - 1
  CHECK(mesh_value(ev, g, {2, 6}) == 18);  // 2*d_1(5) + d_2(5) - d_1(4)

  std::map<Coord, Int> odd_ones;
  for (long t = 0; t <= 10; ++t) odd_ones[{0, t}] = 1;
  for (long i = 2; i <= 9; ++i) odd_ones[{i, i + 1}] = 1;
  AdditiveTable h = evaluate_additive(od, odd_ones, 10);
  CHECK(mesh_value(od, h, {5, 9}) == 117);
}

TEST_CASE("evaluate_additive reproduces the displayed rows") {
  QuiverSpec ev = build_even_quiver(4);
  std::map<Coord, Int> ones;
  for (long t = 0; t <= 4; ++t) ones[{0, t}] = 1;
  AdditiveTable g = evaluate_additive(ev, ones, 4);
  CHECK(g.at({0, 4}) == 1);
  CHECK(g.at({1, 4}) == 4);
  CHECK(g.at({2, 4}) == 7);

  QuiverSpec od = build_odd_quiver(5);
  std::map<Coord, Int> proj;
  for (long t = 0; t <= 5; ++t) proj[{0, t}] = 1;
  for (long i = 2; i <= 4; ++i) proj[{i, i + 1}] = 1;
  AdditiveTable h = evaluate_additive(od, proj, 5);
  const long want[] = {1, 4, 8, 5, 1};
  for (long i = 0; i < 5; ++i) CHECK(h.at({i, 5}) == want[i]);
}

TEST_CASE("zero projective values give the zero function") {
  QuiverSpec ev = build_even_quiver(8);
  std::map<Coord, Int> zeros;
  for (long t = 0; t <= 8; ++t) zeros[{0, t}] = 0;
  AdditiveTable g = evaluate_additive(ev, zeros, 8);
  for (const auto& [z, v] : g.values) CHECK(v == 0);
}

TEST_CASE("missing projective value is rejected") {
  QuiverSpec ev = build_even_quiver(3);
  std::map<Coord, Int> partial{{{0, 0}, Int(1)}};
  CHECK_THROWS_AS(evaluate_additive(ev, partial, 3), std::invalid_argument);
}

TEST_CASE("additive evaluation is linear and deterministic") {
  QuiverSpec od = build_odd_quiver(20);
  std::vector<Coord> projectives;
  for (long t = 0; t <= 20; ++t)
    for (const auto& z : od.vertices_in_row(t))
      if (od.is_projective(z)) projectives.push_back(z);

  std::mt19937 rng(42);
  std::uniform_int_distribution<long> pick(-9, 9);
  for (int round = 0; round < 3; ++round) {
    std::map<Coord, Int> a, b, sum;
    for (const auto& z : projectives) {
      a[z] = pick(rng);
      b[z] = pick(rng);
      sum[z] = a[z] + b[z];
    }
    AdditiveTable ga = evaluate_additive(od, a, 20);
    AdditiveTable gb = evaluate_additive(od, b, 20);
    AdditiveTable gs = evaluate_additive(od, sum, 20);
    for (const auto& [z, v] : gs.values) CHECK(v == ga.at(z) + gb.at(z));

    AdditiveTable ga2 = evaluate_additive(od, a, 20);
    CHECK(ga.values == ga2.values);
  }
}

TEST_CASE("evaluated meshes re-check exactly") {
  QuiverSpec ev = build_even_quiver(30);
  std::map<Coord, Int> ones;
  for (long t = 0; t <= 30; ++t) ones[{0, t}] = 1;
  AdditiveTable g = evaluate_additive(ev, ones, 30);
  for (const auto& [z, v] : g.values)
    if (!ev.is_projective(z)) CHECK(mesh_value(ev, g, z) == v);
}
