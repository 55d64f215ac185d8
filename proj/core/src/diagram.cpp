#include "pretzel/diagram.hpp"

#include <cmath>
#include <cstdlib>

namespace pretzel {

OrientedDiagram OrientedDiagram::reversed() const {
  OrientedDiagram d = *this;
  for (size_t i = 0; i < d.tl_down.size(); ++i) d.tl_down[i] = !d.tl_down[i];
  return d;
}

OrientedDiagram orient(const PretzelCode& code) {
  const int r = code.size();
  if (r == 0) throw not_a_knot_error("empty code");
  if (component_count(code) != 1)
    throw not_a_knot_error("NotAKnot: " + render(code));

  // Port ids as in component_count: TL=4i, TR=4i+1, BL=4i+2, BR=4i+3.
  std::vector<int> through(4 * r, -1), link(4 * r, -1);
  for (int i = 0; i < r; ++i) {
    bool odd = std::abs(code[i]) % 2 == 1;
    int tl = 4 * i, tr = 4 * i + 1, bl = 4 * i + 2, br = 4 * i + 3;
    if (odd) {
      through[tl] = br; through[br] = tl;
      through[tr] = bl; through[bl] = tr;
    } else {
      through[tl] = bl; through[bl] = tl;
      through[tr] = br; through[br] = tr;
    }
  }
  for (int i = 0; i < r; ++i) {
    int j = (i + 1) % r;
    link[4 * i + 1] = 4 * j;
    link[4 * j] = 4 * i + 1;
    link[4 * i + 3] = 4 * j + 2;
    link[4 * j + 2] = 4 * i + 3;
  }

  // Walk the knot starting into tangle 0 at its top-left port; record which
  // ports are inflows (entered from outside the tangle).
  std::vector<char> inflow(4 * r, 0);
  int v = 0;  // TL_0, entering downward
  do {
    inflow[v] = 1;
    int w = through[v];  // exit port of this tangle passage
    v = link[w];
  } while (v != 0);

  OrientedDiagram d;
  d.code = code;
  d.roles.resize(r);
  d.tl_down.resize(r);
  for (int i = 0; i < r; ++i) {
    bool tl_in = inflow[4 * i] != 0;
    bool tr_in = inflow[4 * i + 1] != 0;
    d.roles[i].kind = (tl_in == tr_in) ? RoleKind::Parallel : RoleKind::Antiparallel;
    d.roles[i].sign = code[i] > 0 ? +1 : -1;
    d.tl_down[i] = tl_in;
  }

  // Fix the global orientation: first parallel tangle points downward, else
  // the top-left strand of tangle 1.
  int first_parallel = -1;
  for (int i = 0; i < r; ++i)
    if (d.parallel(i)) {
      first_parallel = i;
      break;
    }
  int anchor = first_parallel >= 0 ? first_parallel : 0;
  if (!d.tl_down[anchor])
    for (int i = 0; i < r; ++i) d.tl_down[i] = !d.tl_down[i];
  return d;
}

}  // namespace pretzel
