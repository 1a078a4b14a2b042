#include "fibtri/triangles.hpp"

#include <stdexcept>

namespace fibtri {

QuiverSpec build_even_quiver(long max_row) {
  QuiverSpec q;
  q.max_row = max_row;
  q.is_vertex = [max_row](Coord c) {
    return c.i >= 0 && 2 * c.i <= c.t && c.t <= max_row;
  };
  q.is_projective = [](Coord c) { return c.i == 0; };
  q.tau = [](Coord c) -> std::optional<Coord> {
    if (c.i == 0) return std::nullopt;
    return Coord{c.i - 1, c.t - 2};
  };
  q.se_valuation = [](Coord c) -> std::optional<Valuation> {
    if (2 * c.i >= c.t) return std::nullopt;
    // Target (i+1, t+1) lies on the pylon iff t = 2i+1.
    if (c.t == 2 * c.i + 1) return Valuation{3, 1};
    return Valuation{2, 1};
  };
  q.row_span = [](long t) { return std::pair<long, long>{0, t / 2}; };
  return q;
}

QuiverSpec build_odd_quiver(long max_row) {
  QuiverSpec q;
  q.max_row = max_row;
  q.is_vertex = [max_row](Coord c) {
    if (c.t < 0 || c.t > max_row) return false;
    return (c.i == 0 && c.t == 0) || (c.i >= 0 && c.i < c.t);
  };
  q.is_projective = [](Coord c) {
    return c.i == 0 || (c.i >= 2 && c.t == c.i + 1);
  };
  q.tau = [](Coord c) -> std::optional<Coord> {
    if (c.i == 0 || (c.i >= 2 && c.t == c.i + 1)) return std::nullopt;
    return Coord{c.i - 1, c.t - 2};
  };
  q.se_valuation = [](Coord c) -> std::optional<Valuation> {
    if (c.i == 0 && c.t == 0) return std::nullopt;
    // (i,2i) -> (i+1,2i+1) joins the two pylons.
    if (c.t == 2 * c.i) return Valuation{1, 1};
    if (2 * c.i < c.t) return Valuation{2, 1};
    return Valuation{1, 2};
  };
  q.row_span = [](long t) {
    return std::pair<long, long>{0, t == 0 ? 0 : t - 1};
  };
  return q;
}

namespace {

std::vector<std::vector<Int>> rows_from(const QuiverSpec& q,
                                        const AdditiveTable& g) {
  std::vector<std::vector<Int>> rows(q.max_row + 1);
  for (long t = 0; t <= q.max_row; ++t)
    for (const Coord& z : q.vertices_in_row(t)) rows[t].push_back(g.at(z));
  return rows;
}

}  // namespace

ValueTable ValueTable::even(long max_row) {
  QuiverSpec q = build_even_quiver(max_row);
  std::map<Coord, Int> proj;
  for (long t = 0; t <= max_row; ++t) proj[{0, t}] = 1;
  AdditiveTable g = evaluate_additive(q, proj, max_row);
  ValueTable tbl;
  tbl.kind = TriangleKind::Even;
  tbl.max_row = max_row;
  tbl.rows = rows_from(q, g);
  return tbl;
}

ValueTable ValueTable::odd(long max_row) {
  QuiverSpec q = build_odd_quiver(max_row);
  std::map<Coord, Int> proj;
  for (long t = 0; t <= max_row; ++t) {
    for (const Coord& z : q.vertices_in_row(t))
      if (q.is_projective(z)) proj[z] = 1;
  }
  AdditiveTable g = evaluate_additive(q, proj, max_row);
  ValueTable tbl;
  tbl.kind = TriangleKind::Odd;
  tbl.max_row = max_row;
  tbl.rows = rows_from(q, g);
  return tbl;
}

const Int& ValueTable::stored(long i, long t) const {
  if (t < 0 || t > max_row)
    throw std::out_of_range("row " + std::to_string(t) + " out of range");
  const auto& row = rows[t];
  if (i < 0 || i >= static_cast<long>(row.size()))
    throw std::out_of_range("entry " + std::to_string(i) + " of row " +
                            std::to_string(t) + " out of range");
  return row[i];
}

Int even_lookup(const ValueTable& tbl, long i, long t) {
  if (tbl.kind != TriangleKind::Even)
    throw std::invalid_argument("even_lookup on odd table");
  if (t < 0 || t > tbl.max_row)
    throw std::out_of_range("row " + std::to_string(t) + " out of range");
  if (2 * i > t) i = t - i;  // d_i(t) = d_{t-i}(t)
  if (i < 0) return 0;
  return tbl.rows[t][i];
}

Int odd_lookup_prime(const ValueTable& tbl, long i, long t) {
  if (tbl.kind != TriangleKind::Odd)
    throw std::invalid_argument("odd_lookup_prime on even table");
  if (t < 0 || t > tbl.max_row)
    throw std::out_of_range("row " + std::to_string(t) + " out of range");
  if (i < 0 || i >= static_cast<long>(tbl.rows[t].size())) return 0;
  return tbl.rows[t][i];
}

Int odd_lookup_double(const ValueTable& tbl, long i, long t) {
  if (i == -1 && t == 0) return 1;
  if (i < 0) return 0;
  return odd_lookup_prime(tbl, t - i - 1, t);
}

Int even_hook(const ValueTable& tbl, long i, long t) {
  if (i < 0 || 2 * i > t || t < 1 || t > tbl.max_row)
    throw std::out_of_range("even_hook out of range at (" + std::to_string(i) +
                            "," + std::to_string(t) + ")");
  Int acc;
  if (2 * i < t) {
    acc = even_lookup(tbl, i, t - 1);
    for (long j = 0; j < i; ++j) acc += even_lookup(tbl, j, t - i + j);
  } else {
    // Pylon case, using the convention g_i(2i-1) := g_{i-1}(2i-1).
    acc = even_lookup(tbl, i - 1, 2 * i - 1);
    for (long j = 0; j < i; ++j) acc += even_lookup(tbl, j, i + j);
  }
  return acc;
}

Int odd_hook_prime(const ValueTable& tbl, long i, long t) {
  if (i < 0 || 2 * i > t || t < 1 || t > tbl.max_row)
    throw std::out_of_range("odd_hook_prime out of range at (" +
                            std::to_string(i) + "," + std::to_string(t) + ")");
  Int acc = odd_lookup_prime(tbl, i, t - 1);
  for (long j = 0; j < i; ++j) acc += odd_lookup_prime(tbl, j, t - i + j);
  return acc;
}

Int odd_hook_double(const ValueTable& tbl, long i, long t) {
  // The underlying vertex (t-1-i, t) must lie strictly right of the first
  // pylon: 2(t-1-i) > t, i.e. t >= 2i+3.
  if (i < 0 || t < 2 * i + 3 || t > tbl.max_row)
    throw std::out_of_range("odd_hook_double out of range at (" +
                            std::to_string(i) + "," + std::to_string(t) + ")");
  Int acc = odd_lookup_double(tbl, i, t - 1);
  for (long j = 0; j < i; ++j) acc += odd_lookup_double(tbl, j, t - i + j);
  return acc;
}

std::vector<std::vector<Int>> even_closed_rows(long max_row) {
  std::vector<std::vector<Int>> rows(max_row + 1);
  auto look = [&rows](long i, long t) -> Int {
    if (2 * i > t) i = t - i;
    if (i < 0) return 0;
    return rows[t][i];
  };
  for (long t = 0; t <= max_row; ++t) {
    rows[t].resize(t / 2 + 1);
    rows[t][0] = 1;
    for (long i = 1; 2 * i <= t; ++i)
      rows[t][i] = 2 * look(i - 1, t - 1) + look(i, t - 1) - look(i - 1, t - 2);
  }
  return rows;
}

std::vector<std::vector<Int>> odd_closed_rows(long max_row) {
  std::vector<std::vector<Int>> rows(max_row + 1);
  auto look = [&rows](long i, long t) -> Int {
    if (i < 0 || i >= static_cast<long>(rows[t].size())) return 0;
    return rows[t][i];
  };
  rows[0] = {Int(1)};
  for (long t = 1; t <= max_row; ++t) {
    rows[t].resize(t);
    for (long i = 0; i < t; ++i) {
      if (i == 0 || (i >= 2 && t == i + 1)) {
        rows[t][i] = 1;  // projective
      } else if (2 * i <= t) {
        rows[t][i] =
            2 * look(i - 1, t - 1) + look(i, t - 1) - look(i - 1, t - 2);
      } else {
        rows[t][i] =
            look(i - 1, t - 1) + 2 * look(i, t - 1) - look(i - 1, t - 2);
      }
    }
  }
  return rows;
}

Concordance concordance_even(long i, long t) {
  if (i < 0 || 2 * i > t)
    throw std::out_of_range("concordance_even: bad vertex");
  return {(t + 1) / 2, t - 2 * i};
}

Coord concordance_even_inverse(long s, long j) {
  long t = (j % 2 == 0) ? 2 * s : 2 * s - 1;
  if (t < 0 || j < 0 || j > t || (t - j) % 2 != 0)
    throw std::invalid_argument("concordance_even_inverse: inconsistent (s,j)");
  return {(t - j) / 2, t};
}

Concordance concordance_odd(long i, long t, bool dbl) {
  if (t < 0) throw std::out_of_range("concordance_odd: bad row");
  if (dbl) return {(t + 1) / 2, -t + 2 + 2 * i};
  return {(t + 1) / 2, t - 2 * i};
}

}  // namespace fibtri
