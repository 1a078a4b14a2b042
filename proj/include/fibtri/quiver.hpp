#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibtri/bigint.hpp"

namespace fibtri {

// Vertex (i, t): i = diagonal index (any integer under lookup conventions),
// t = row index (nonnegative for actual vertices).
struct Coord {
  long i = 0;
  long t = 0;
  auto operator<=>(const Coord&) const = default;
};

std::string to_string(Coord c);

// Valuation pair (v', v'') of an arrow.
struct Valuation {
  long v_prime = 1;
  long v_double_prime = 1;
};

// Finite truncation (rows 0..max_row) of a valued translation quiver.
//
// Arrows run downwards one row at a time: south-west (i,t) -> (i,t+1) and
// south-east (i,t) -> (i+1,t+1). Only south-east valuations are stored; the
// south-west values entering a mesh are always derived from the translation
// law v'(tau z, y) = v''(y, z) (see sw_arrow_v_prime).
struct QuiverSpec {
  long max_row = 0;
  std::function<bool(Coord)> is_vertex;
  std::function<bool(Coord)> is_projective;
  // Defined exactly on non-projective vertices.
  std::function<std::optional<Coord>(Coord)> tau;
  // Valuation of the south-east arrow leaving c, if that arrow exists.
  std::function<std::optional<Valuation>(Coord)> se_valuation;
  // Candidate i-range [lo, hi] scanned per row (filtered through is_vertex).
  std::function<std::pair<long, long>(long)> row_span;

  bool has_sw_arrow(Coord from) const;
  bool has_se_arrow(Coord from) const;
  std::vector<Coord> vertices_in_row(long t) const;
  std::vector<Coord> predecessors(Coord z) const;  // z^-
  std::vector<Coord> successors(Coord x) const;    // x^+
};

// Values of an additive function, keyed by vertex.
struct AdditiveTable {
  const QuiverSpec* spec = nullptr;
  std::map<Coord, Int> values;

  bool contains(Coord z) const { return values.find(z) != values.end(); }
  // Throws std::out_of_range naming the absent coordinate.
  const Int& at(Coord z) const;
};

struct SpecViolation {
  std::string rule;
  Coord where;
  std::string detail;
};

// Checks the three QuiverSpec invariants on rows 0..max_row:
// tau injective and defined exactly on non-projectives, the translation law
// (tau z)^+ = z^-, and cross-mesh valuation compatibility.
std::vector<SpecViolation> validate_spec(const QuiverSpec& q);

// v' of the south-west arrow (i,t-1) -> z, derived as v'' of the south-east
// arrow tau(z) -> (i,t-1). Throws std::logic_error if that arrow is missing.
long sw_arrow_v_prime(const QuiverSpec& q, Coord z);

// Right-hand side of the mesh relation minus the tau term:
//   sum_{y in z^-} v'(y,z) g(y)  -  g(tau z).
Int mesh_value(const QuiverSpec& q, const AdditiveTable& g, Coord z);

// Evaluates the unique additive function with the given projective values,
// row by increasing t. Throws std::invalid_argument on a missing projective
// value; a malformed spec whose dependencies are not in earlier rows surfaces
// as a missing-dependency error from mesh_value.
AdditiveTable evaluate_additive(const QuiverSpec& q,
                                const std::map<Coord, Int>& projective_values,
                                long up_to_row);

}  // namespace fibtri
