#include "pretzel/checkerboard.hpp"

#include <cmath>
#include <sstream>

namespace pretzel {

std::vector<std::pair<int, int>> CheckerboardGraphs::black_edges() const {
  std::vector<std::pair<int, int>> edges;
  int next_interior = 2;
  for (int i = 0; i < tangle_count(); ++i) {
    int prev = 0;  // root
    for (int j = 0; j < length[i]; ++j) {
      int cur = (j == length[i] - 1) ? 1 : next_interior++;
      edges.emplace_back(prev, cur);
      prev = cur;
    }
  }
  return edges;
}

std::vector<std::pair<int, int>> CheckerboardGraphs::white_edges() const {
  std::vector<std::pair<int, int>> edges;
  const int r = tangle_count();
  for (int i = 0; i < r; ++i) {
    int a = (i + r - 1) % r;
    for (int j = 0; j < length[i]; ++j) edges.emplace_back(a, i);
  }
  return edges;
}

CheckerboardGraphs build_graphs(const OrientedDiagram& diagram) {
  CheckerboardGraphs g;
  g.diagram = diagram;
  const int r = diagram.size();
  g.length.resize(r);
  g.black_eta.assign(r, 0);
  g.white_eta.assign(r, 0);
  for (int i = 0; i < r; ++i) {
    g.length[i] = std::abs(diagram.code[i]);
    int e = diagram.roles[i].sign;
    if (diagram.parallel(i))
      g.black_eta[i] = -e;
    else
      g.white_eta[i] = e;
  }
  return g;
}

long long spanning_tree_count(const CheckerboardGraphs& graphs) {
  long long total = 0;
  const int r = graphs.tangle_count();
  for (int k = 0; k < r; ++k) {
    long long prod = 1;
    for (int i = 0; i < r; ++i)
      if (i != k) prod *= graphs.length[i];
    total += prod;
  }
  return total;
}

std::string dot_dump(const CheckerboardGraphs& graphs) {
  std::ostringstream os;
  os << "graph checkerboard {\n";
  os << "  // black graph: b0 = root, b1 = top\n";
  auto be = graphs.black_edges();
  {
    int idx = 0;
    for (int i = 0; i < graphs.tangle_count(); ++i)
      for (int j = 0; j < graphs.length[i]; ++j, ++idx)
        os << "  b" << be[idx].first << " -- b" << be[idx].second
           << " [label=\"t" << i << " eta=" << graphs.black_eta[i] << "\"];\n";
  }
  os << "  // white graph: w" << graphs.tangle_count() - 1 << " = outer root\n";
  auto we = graphs.white_edges();
  {
    int idx = 0;
    for (int i = 0; i < graphs.tangle_count(); ++i)
      for (int j = 0; j < graphs.length[i]; ++j, ++idx)
        os << "  w" << we[idx].first << " -- w" << we[idx].second
           << " [label=\"t" << i << " eta=" << graphs.white_eta[i]
           << "\",style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pretzel
