#pragma once
// Black/white checkerboard graphs of the standard pretzel projection.
//
// The black graph is a generalized theta graph: root (bottom) and top vertex
// joined by one path T(n_i) of |n_i| edges per tangle.  The white graph has
// one vertex per inter-tangle region (the outer region is the white root) and
// |n_i| parallel edges between the regions flanking tangle i.  Crossing j of
// tangle i (counted from the bottom) carries black edge (i,j) and white edge
// (i,j); exactly one of the two has a nonzero eta label.

#include <cstdint>
#include <string>
#include <vector>

#include "pretzel/diagram.hpp"

namespace pretzel {

struct CheckerboardGraphs {
  OrientedDiagram diagram;
  std::vector<int> length;     // |n_i| per tangle
  std::vector<int> black_eta;  // eta of every edge of T(n_i); 0 for antiparallel
  std::vector<int> white_eta;  // eta of tangle i's white parallel class; 0 for parallel

  int tangle_count() const { return static_cast<int>(length.size()); }
  long long crossing_count() const {
    long long s = 0;
    for (int l : length) s += l;
    return s;
  }
  long long black_edge_count() const { return crossing_count(); }
  long long white_edge_count() const { return crossing_count(); }
  long long black_vertex_count() const {
    long long s = 2;
    for (int l : length) s += l - 1;
    return s;
  }
  long long white_vertex_count() const { return tangle_count(); }

  // Explicit black multigraph edge list over vertices 0..V-1 with 0 = root,
  // 1 = top, interior vertices following tangle by tangle.  Used by the
  // matrix-tree oracle and the DOT dump.
  std::vector<std::pair<int, int>> black_edges() const;
  // White multigraph: vertex i = region right of tangle i, vertex r-1 = outer
  // root; tangle i's class joins vertices (i-1 mod r) and i.
  std::vector<std::pair<int, int>> white_edges() const;
};

// Assigns eta per the crossing pictures: a parallel tangle of sign e labels
// its black edges -e (white 0); an antiparallel tangle labels its white
// parallel class e (black 0).
CheckerboardGraphs build_graphs(const OrientedDiagram& diagram);

// Closed form Sum_i Prod_{j != i} |n_j| for the number of black spanning trees.
long long spanning_tree_count(const CheckerboardGraphs& graphs);

// Graphviz dump of both graphs with eta labels.
std::string dot_dump(const CheckerboardGraphs& graphs);

}  // namespace pretzel
