#include "pretzel/invariants.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace pretzel {

BigInt determinant_formula(const PretzelCode& code) {
  if (component_count(code) != 1)
    throw not_a_knot_error("NotAKnot: " + render(code));
  const int r = code.size();
  BigInt sum = 0;
  for (int i = 0; i < r; ++i) {
    BigInt prod = 1;
    for (int j = 0; j < r; ++j)
      if (j != i) prod *= code[j];
    sum += prod;
  }
  if (sum < 0) sum = -sum;
  // det = 0 would mean the double branched cover is not a rational homology
  // sphere, impossible for a knot.
  if (sum == 0) throw internal_error("determinant 0 for a knot code");
  return sum;
}

int seifert_circle_count(const OrientedDiagram& diagram) {
  const int r = diagram.size();
  // Oriented resolution: a parallel tangle resolves to two vertical strands;
  // an antiparallel tangle resolves to |n|-1 closed circles inside the twist
  // region plus a top cap and a bottom cap.
  int circles = 0;
  std::vector<int> parent(4 * r);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int i = 0; i < r; ++i) {
    int tl = 4 * i, tr = 4 * i + 1, bl = 4 * i + 2, br = 4 * i + 3;
    if (diagram.parallel(i)) {
      unite(tl, bl);
      unite(tr, br);
    } else {
      circles += std::abs(diagram.code[i]) - 1;
      unite(tl, tr);
      unite(bl, br);
    }
  }
  for (int i = 0; i < r; ++i) {
    int j = (i + 1) % r;
    unite(4 * i + 1, 4 * j);      // TR_i - TL_{i+1}
    unite(4 * i + 3, 4 * j + 2);  // BR_i - BL_{i+1}
  }
  std::vector<char> counted(4 * r, 0);
  for (int v = 0; v < 4 * r; ++v) {
    int root = find(v);
    if (!counted[root]) {
      counted[root] = 1;
      ++circles;
    }
  }
  return circles;
}

int seifert_genus(const OrientedDiagram& diagram) {
  long long crossings = 0;
  for (int n : diagram.code.tangles) crossings += std::abs(n);
  int s = seifert_circle_count(diagram);
  long long g2 = crossings - s + 1;
  if (g2 < 0 || g2 % 2 != 0) throw internal_error("bad Seifert circle count");
  return static_cast<int>(g2 / 2);
}

DetVerdict det_obstruction(const PretzelCode& code, int certified_genus) {
  DetVerdict v;
  v.det = determinant_formula(code);
  v.genus_bound = BigInt(2) * certified_genus + 1;
  v.violated = v.det > v.genus_bound;
  return v;
}

}  // namespace pretzel
