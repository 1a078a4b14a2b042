#include "fibtri/render.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fibtri {

OutputFormat parse_format(const std::string& name) {
  if (name == "pretty") return OutputFormat::Pretty;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "bfile") return OutputFormat::Bfile;
  throw std::invalid_argument("unknown format: " + name);
}

std::string kind_name(TriangleKind k) {
  return k == TriangleKind::Even ? "even" : "odd";
}

std::string render_triangle(const ValueTable& tbl, OutputFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case OutputFormat::Pretty:
      for (const auto& row : tbl.rows) {
        for (size_t i = 0; i < row.size(); ++i)
          out << (i ? " " : "") << row[i].get_str();
        out << "\n";
      }
      break;
    case OutputFormat::Csv:
      for (long t = 0; t <= tbl.max_row; ++t)
        for (size_t i = 0; i < tbl.rows[t].size(); ++i)
          out << t << "," << i << "," << tbl.rows[t][i].get_str() << "\n";
      break;
    case OutputFormat::Json: {
      nlohmann::json j;
      j["kind"] = kind_name(tbl.kind);
      j["max_row"] = tbl.max_row;
      j["entries"] = nlohmann::json::array();
      for (long t = 0; t <= tbl.max_row; ++t)
        for (size_t i = 0; i < tbl.rows[t].size(); ++i)
          j["entries"].push_back({{"t", t},
                                  {"i", i},
                                  {"value", tbl.rows[t][i].get_str()}});
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Bfile: {
      long n = 1;
      for (const auto& row : tbl.rows)
        for (const auto& v : row) out << n++ << " " << v.get_str() << "\n";
      break;
    }
  }
  return out.str();
}

std::vector<std::tuple<long, long, Int>> parse_triangle_csv(
    const std::string& text) {
  std::vector<std::tuple<long, long, Int>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto c1 = line.find(',');
    auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::invalid_argument("bad csv line: " + line);
    out.emplace_back(std::stol(line.substr(0, c1)),
                     std::stol(line.substr(c1 + 1, c2 - c1 - 1)),
                     Int(line.substr(c2 + 1)));
  }
  return out;
}

}  // namespace fibtri
