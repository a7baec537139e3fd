#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "lvnet/errors.hpp"

namespace lvnet::cli {

void emit(const std::string& text, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + *path + "' for writing");
  out << text;
  if (!out.flush()) throw IoError("failed writing '" + *path + "'");
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string matrix_table(const Matrix& m, const std::vector<std::string>& names) {
  std::string out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-10s", "");
  out += buf;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::snprintf(buf, sizeof buf, "%12s", names[j].c_str());
    out += buf;
  }
  out += '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::snprintf(buf, sizeof buf, "%-10s", names[i].c_str());
    out += buf;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%12.6g", m(i, j));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string edge_table(const Graph& g, const std::vector<std::string>& names) {
  std::string out = "edges (" + std::to_string(g.edge_count()) + ", " +
                    std::string(to_string(g.weight_kind())) + ")\n";
  char buf[160];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof buf, "  %s -- %s  %.6g\n", names[e.i].c_str(), names[e.j].c_str(),
                  e.weight);
    out += buf;
  }
  return out;
}

}  // namespace lvnet::cli
