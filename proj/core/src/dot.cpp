#include "lvnet/dot.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lvnet/errors.hpp"

namespace lvnet {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_dot(const Graph& g, const std::vector<std::string>& names) {
  if (!names.empty() && names.size() != g.num_nodes())
    throw InvalidArgument("node name count does not match the graph");
  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    out << "  " << v + 1;
    if (!names.empty()) out << " [label=\"" << escape(names[v]) << "\"]";
    out << ";\n";
  }
  char weight[32];
  for (const Edge& e : g.edges()) {
    std::snprintf(weight, sizeof weight, "%.4g", e.weight);
    out << "  " << e.i + 1 << " -- " << e.j + 1 << " [label=\"" << weight << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

void export_dot(const Graph& g, const std::filesystem::path& path,
                const std::vector<std::string>& names) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << to_dot(g, names);
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace lvnet
