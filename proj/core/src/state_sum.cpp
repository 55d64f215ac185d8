#include "pretzel/state_sum.hpp"

#include <map>

namespace pretzel {

void for_each_state(const CheckerboardGraphs& graphs,
                    const std::function<bool(const KauffmanState&)>& visit) {
  const int r = graphs.tangle_count();
  KauffmanState s;
  s.omit.assign(r, 0);
  for (int k = 0; k < r; ++k) {
    s.trunk = k;
    for (int i = 0; i < r; ++i) s.omit[i] = (i == k) ? -1 : 0;
    for (;;) {
      if (!visit(s)) return;
      // odometer over the omitted indices
      int i = r - 1;
      for (; i >= 0; --i) {
        if (i == k) continue;
        if (s.omit[i] + 1 < graphs.length[i]) {
          ++s.omit[i];
          for (int j = i + 1; j < r; ++j)
            if (j != k) s.omit[j] = 0;
          break;
        }
      }
      if (i < 0) break;
    }
  }
}

std::vector<KauffmanState> enumerate_states(const CheckerboardGraphs& graphs) {
  std::vector<KauffmanState> out;
  for_each_state(graphs, [&](const KauffmanState& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

int trunk_of(const KauffmanState& state) { return state.trunk; }

namespace {

// Twice the A-grading plus the M-grading of a state, from the per-tangle
// closed forms.  Tree edges split into the trunk path, the lower/upper
// segments of each non-trunk black path, and one dual white edge per
// non-trunk tangle.  The away-from-root orientation points up along the
// trunk and the lower segments, down along the upper segments; the white
// tree runs rightward through classes left of the trunk and leftward
// through classes right of it.
struct GradingAccumulator {
  long long a2 = 0;
  long long m = 0;

  void add_group(long long count, int sigma, int eta) {
    a2 += count * sigma * eta;
    if (sigma > 0) m += count * eta;
  }
};

}  // namespace

Bigrading bigrading(const KauffmanState& state, const CheckerboardGraphs& graphs) {
  const int r = graphs.tangle_count();
  const int k = state.trunk;
  GradingAccumulator acc;
  for (int i = 0; i < r; ++i) {
    const int n = graphs.length[i];
    const bool dn = graphs.diagram.tl_down[i];
    if (graphs.diagram.parallel(i)) {
      const int eta = graphs.black_eta[i];
      if (i == k) {
        acc.add_group(n, dn ? -1 : +1, eta);
      } else {
        const int o = state.omit[i];
        const int lo = dn ? -1 : +1;  // tree points up, K points along dn
        acc.add_group(o, lo, eta);
        acc.add_group(n - 1 - o, -lo, eta);
      }
    } else {
      if (i == k) continue;  // white class of the trunk is not in the dual tree
      const int eta = graphs.white_eta[i];
      const int o = state.omit[i];
      // K orients consecutive white edges alternately; the topmost points
      // rightward exactly when the top-left strand flows down.
      const bool k_right = dn != (((n - 1 - o) & 1) == 1);
      const bool away_right = i < k;
      acc.add_group(1, away_right == k_right ? +1 : -1, eta);
    }
  }
  if (acc.a2 % 2 != 0)
    throw internal_error("non-integral A-grading: eta/sigma inconsistency");
  return Bigrading{static_cast<int>(acc.a2 / 2), static_cast<int>(acc.m)};
}

LaurentPolynomial alexander(const OrientedDiagram& diagram) {
  CheckerboardGraphs graphs = build_graphs(diagram);
  std::map<int, BigInt> coeffs;
  for_each_state(graphs, [&](const KauffmanState& s) {
    Bigrading b = bigrading(s, graphs);
    coeffs[b.A] += (b.M % 2 == 0) ? 1 : -1;
    return true;
  });
  LaurentPolynomial p;
  for (const auto& [e, c] : coeffs) p.add_term(e, c);
  return p;
}

LaurentPolynomial alexander(const PretzelCode& code) { return alexander(orient(code)); }

MinimalStates minimal_states(const CheckerboardGraphs& graphs) {
  MinimalStates out;
  bool first = true;
  for_each_state(graphs, [&](const KauffmanState& s) {
    int a = bigrading(s, graphs).A;
    if (first || a < out.a_min) {
      out.a_min = a;
      out.states.clear();
      first = false;
    }
    if (a == out.a_min) out.states.push_back(s);
    return true;
  });
  return out;
}

MinimalStates minimal_states(const PretzelCode& code) {
  return minimal_states(build_graphs(orient(code)));
}

std::vector<KauffmanState> trades_of(const CheckerboardGraphs& graphs) {
  MinimalStates ms = minimal_states(graphs);
  if (ms.states.size() != 1)
    throw no_unique_minimum_error("NoUniqueMinimum: " + render(graphs.diagram.code));
  const KauffmanState& base = ms.states.front();
  std::vector<KauffmanState> trades;
  for (int i = 0; i < graphs.tangle_count(); ++i) {
    if (i == base.trunk || graphs.length[i] < 2) continue;
    const int n = graphs.length[i];
    const int o = base.omit[i];
    // The trade swaps the terminal tree edge adjacent to the omitted edge
    // with the omitted edge itself.  When the omitted edge is interior, both
    // flanking edges are terminal and either swap lands one step above the
    // minimum; take the root-side one so the choice is deterministic.
    int o2;
    if (o == 0)
      o2 = 1;
    else
      o2 = o - 1;
    KauffmanState t = base;
    t.omit[i] = o2;
    trades.push_back(t);
  }
  return trades;
}

std::vector<KauffmanState> trades_of(const PretzelCode& code) {
  return trades_of(build_graphs(orient(code)));
}

}  // namespace pretzel
