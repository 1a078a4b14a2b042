#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "fibtri/triangles.hpp"

namespace fibtri {

enum class OutputFormat { Pretty, Csv, Json, Bfile };

OutputFormat parse_format(const std::string& name);  // throws on unknown name
std::string kind_name(TriangleKind k);

// Rows t=0..max_row, row-major, leftmost entry first.
//   Pretty: one space-separated row per line.
//   Csv:    "t,i,value" lines.
//   Json:   {"kind","max_row","entries":[{"t","i","value"(decimal string)}]}.
//   Bfile:  "n value" lines, 1-based running index.
std::string render_triangle(const ValueTable& tbl, OutputFormat fmt);

// Parses Csv output back into (t, i, value) triples.
std::vector<std::tuple<long, long, Int>> parse_triangle_csv(
    const std::string& text);

}  // namespace fibtri
