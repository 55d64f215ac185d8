#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "pretzel/checkerboard.hpp"
#include "pretzel/laurent.hpp"

using namespace pretzel;
using pretzel_tests::for_each_knot;

namespace {

// Kirchhoff: spanning trees = any cofactor of the Laplacian.  Fraction-free
// elimination keeps everything in integers.
BigInt matrix_tree(int vertices, const std::vector<std::pair<int, int>>& edges) {
  int n = vertices - 1;
  if (n <= 0) return 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (auto [a, b] : edges) {
    if (a == b) continue;
    if (a < n) m[a][a] += 1;
    if (b < n) m[b][b] += 1;
    if (a < n && b < n) {
      m[a][b] -= 1;
      m[b][a] -= 1;
    }
  }
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int s = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          s = i;
          break;
        }
      if (s < 0) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Brute force: count (V-1)-subsets of the edge list that connect everything.
long long brute_force_trees(int vertices, const std::vector<std::pair<int, int>>& edges) {
  const int e = static_cast<int>(edges.size());
  REQUIRE(e <= 20);
  long long count = 0;
  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    if (__builtin_popcount(mask) != vertices - 1) continue;
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    for (int i = 0; i < e && acyclic; ++i) {
      if (!(mask >> i & 1)) continue;
      int a = find(edges[i].first), b = find(edges[i].second);
      if (a == b)
        acyclic = false;
      else
        parent[a] = b;
    }
    if (acyclic) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("tangle roles of the worked examples") {
  {
    OrientedDiagram d = orient(PretzelCode{3, -3, 1, 3, 2});
    for (int i = 0; i < 4; ++i) CHECK(d.parallel(i));
    CHECK_FALSE(d.parallel(4));
  }
  {
    OrientedDiagram d = orient(PretzelCode{1, 1, -3});
    for (int i = 0; i < 3; ++i) CHECK_FALSE(d.parallel(i));
  }
  {
    OrientedDiagram d = orient(PretzelCode{5, -7, 5, -4});
    for (int i = 0; i < 4; ++i) CHECK(d.parallel(i));
  }
}

TEST_CASE("role pattern follows the parity structure") {
  for_each_knot(3, 4, 4, [](const PretzelCode& code) {
    OrientedDiagram d = orient(code);
    int even_index = -1;
    for (int i = 0; i < code.size(); ++i)
      if (code[i] % 2 == 0) even_index = i;
    if (even_index < 0) {
      for (int i = 0; i < d.size(); ++i) CHECK_FALSE(d.parallel(i));
    } else {
      // Either the even tangle is the unique antiparallel one, or none is.
      bool even_anti = !d.parallel(even_index);
      for (int i = 0; i < d.size(); ++i)
        if (i != even_index) CHECK(d.parallel(i));
      if (!even_anti) CHECK(d.parallel(even_index));
    }
  });
}

TEST_CASE("eta labels per crossing type") {
  {
    CheckerboardGraphs g = build_graphs(orient(PretzelCode{5, -7, 5, -4}));
    CHECK(g.black_eta == std::vector<int>{-1, 1, -1, 1});
    CHECK(g.white_eta == std::vector<int>{0, 0, 0, 0});
  }
  {
    CheckerboardGraphs g = build_graphs(orient(PretzelCode{3, -3, 1, 3, 2}));
    CHECK(g.black_eta == std::vector<int>{-1, 1, -1, -1, 0});
    CHECK(g.white_eta == std::vector<int>{0, 0, 0, 0, 1});
  }
}

TEST_CASE("closed-form spanning tree counts") {
  CHECK(spanning_tree_count(build_graphs(orient(PretzelCode{1, 1, 1}))) == 3);
  CHECK(spanning_tree_count(build_graphs(orient(PretzelCode{-2, 3, 7}))) == 41);
  CHECK(spanning_tree_count(build_graphs(orient(PretzelCode{3, -3, 1, 3, 2}))) == 135);
}

TEST_CASE("closed form agrees with the matrix-tree theorem") {
  for_each_knot(3, 4, 4, [](const PretzelCode& code) {
    CheckerboardGraphs g = build_graphs(orient(code));
    BigInt black = matrix_tree(static_cast<int>(g.black_vertex_count()), g.black_edges());
    BigInt white = matrix_tree(static_cast<int>(g.white_vertex_count()), g.white_edges());
    CHECK(black == spanning_tree_count(g));
    CHECK(white == spanning_tree_count(g));  // planar duality
  });
}

TEST_CASE("matrix-tree agrees with exhaustive subsets on small graphs") {
  for (PretzelCode code : {PretzelCode{1, 1, 1}, PretzelCode{-2, 3, 7},
                           PretzelCode{3, -3, 1, 3, 2}, PretzelCode{3, -5, 3, -2}}) {
    CheckerboardGraphs g = build_graphs(orient(code));
    CHECK(brute_force_trees(static_cast<int>(g.black_vertex_count()), g.black_edges()) ==
          spanning_tree_count(g));
  }
}

TEST_CASE("dot dump mentions both graphs") {
  std::string dot = dot_dump(build_graphs(orient(PretzelCode{3, -3, 1, 3, 2})));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("eta") != std::string::npos);
}
