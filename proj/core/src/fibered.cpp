#include "pretzel/fibered.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>

namespace pretzel {

std::string to_string(PretzelType type) {
  switch (type) {
    case PretzelType::Type1: return "Type1";
    case PretzelType::Type2A: return "Type2A";
    case PretzelType::Type2B: return "Type2B";
    case PretzelType::Type3_2A: return "Type3-2A";
    case PretzelType::Type3_2B: return "Type3-2B";
    case PretzelType::Type3Min: return "Type3-min";
  }
  throw internal_error("unknown pretzel type");
}

namespace {

// Fibering rule (1): all entries equal s or -3s for a single sign s, with s
// itself appearing.
bool rule_ones_and_threes(const std::vector<int>& v) {
  for (int s : {+1, -1}) {
    bool has_unit = false, ok = true;
    for (int n : v) {
      if (n == s)
        has_unit = true;
      else if (n != -3 * s)
        ok = false;
    }
    if (ok && has_unit) return true;
  }
  return false;
}

// Matches v against pattern under all rotations, reversal, and global sign
// flip (a pretzel code is defined up to dihedral symmetry and mirroring here
// only feeds the +-(...) patterns of the fibering rules).
bool dihedral_match(const std::vector<int>& v,
                    const std::function<bool(const std::vector<int>&)>& pattern) {
  const int r = static_cast<int>(v.size());
  std::vector<int> w(r);
  for (int rev = 0; rev < 2; ++rev) {
    for (int rot = 0; rot < r; ++rot) {
      for (int i = 0; i < r; ++i) {
        int src = rev ? (rot - i % r + 2 * r) % r : (rot + i) % r;
        w[i] = v[src];
      }
      if (pattern(w)) return true;
      for (int& n : w) n = -n;
      if (pattern(w)) return true;
    }
  }
  return false;
}

// Fibering rule (2): (2,-2,...,2,-2,n) with r odd.
bool rule_alternating_tail(const std::vector<int>& v) {
  const int r = static_cast<int>(v.size());
  if (r % 2 == 0) return false;
  for (int i = 0; i + 1 < r; ++i)
    if (v[i] != (i % 2 == 0 ? 2 : -2)) return false;
  return true;
}

// Fibering rule (3): (2,-2,...,-2,2,-4) with r even.
bool rule_alternating_four(const std::vector<int>& v) {
  const int r = static_cast<int>(v.size());
  if (r % 2 != 0 || r < 2) return false;
  for (int i = 0; i + 1 < r; ++i)
    if (v[i] != (i % 2 == 0 ? 2 : -2)) return false;
  return v[r - 1] == -4;
}

bool type1_fibers(const PretzelCode& code, std::string* why) {
  if (rule_ones_and_threes(code.tangles)) {
    if (why) *why = "rule (1): units and opposite threes";
    return true;
  }
  if (dihedral_match(code.tangles, rule_alternating_tail)) {
    if (why) *why = "rule (2): alternating (2,-2,...,n)";
    return true;
  }
  if (dihedral_match(code.tangles, rule_alternating_four)) {
    if (why) *why = "rule (3): alternating (2,-2,...,2,-4)";
    return true;
  }
  return false;
}

// +-(2,-2,...,2,-2): even length, all entries +-2, cyclically alternating.
bool is_even_alternating(const PretzelCode& code) {
  const int r = code.size();
  if (r < 2 || r % 2 != 0) return false;
  for (int i = 0; i < r; ++i) {
    if (std::abs(code[i]) != 2) return false;
    if (code[i] == code[(i + 1) % r]) return false;
  }
  return true;
}

struct ParallelCounts {
  int positive = 0, negative = 0;
  int delta() const { return std::abs(positive - negative); }
};

ParallelCounts parallel_counts(const OrientedDiagram& d) {
  ParallelCounts c;
  for (int i = 0; i < d.size(); ++i)
    if (d.parallel(i)) (d.code[i] > 0 ? c.positive : c.negative)++;
  return c;
}

bool has_antiparallel(const OrientedDiagram& d) {
  for (int i = 0; i < d.size(); ++i)
    if (!d.parallel(i)) return true;
  return false;
}

FiberednessVerdict decide(const PretzelCode& code, int depth) {
  if (depth > 1) throw internal_error("auxiliary-link recursion deeper than one level");
  FiberednessVerdict v;
  if (depth == 1) {
    // By construction the auxiliary link has all strands consistently
    // oriented, so only the three pattern rules apply.
    v.type = PretzelType::Type1;
    std::string why;
    v.fibered = type1_fibers(code, &why);
    v.trace.push_back("auxiliary link " + render(code) + ": " +
                      (v.fibered ? "fibers by " + why : "matches no fibering rule"));
    return v;
  }

  OrientedDiagram d = orient(code);
  ParallelCounts pc = parallel_counts(d);
  const bool anti = has_antiparallel(d);

  if (pc.positive + pc.negative == 0) {
    v.type = PretzelType::Type1;
    std::string why;
    v.fibered = type1_fibers(code, &why);
    v.fiber_is_seifert_surface = v.fibered;
    v.trace.push_back(v.fibered ? "fibers by " + why : "matches no fibering rule");
    return v;
  }

  if (anti) {
    if (pc.delta() == 2) {
      v.type = PretzelType::Type2A;
      v.fibered = true;
      for (int i = 0; i < d.size(); ++i)
        if (!d.parallel(i) && std::abs(code[i]) != 2) v.fibered = false;
      v.fiber_is_seifert_surface = v.fibered;
      v.trace.push_back(v.fibered ? "every antiparallel tangle has |m| = 2"
                                  : "some antiparallel tangle has |m| != 2");
      return v;
    }
    if (pc.delta() == 0) {
      AuxiliaryLink aux = auxiliary_link(d);
      if (is_even_alternating(aux.tangles))
        throw non_minimal_error("NonMinimal: " + render(code) +
                                " has alternating auxiliary link " + render(aux.tangles));
      v.type = PretzelType::Type2B;
      FiberednessVerdict inner = decide(aux.tangles, depth + 1);
      v.fibered = inner.fibered;
      v.trace = std::move(inner.trace);
      return v;
    }
    v.type = PretzelType::Type2A;
    v.fibered = false;
    v.trace.push_back("positive/negative parallel counts differ by more than two");
    return v;
  }

  // No antiparallel tangle: the same dispatch runs on the full tangle list.
  if (pc.delta() == 2) {
    v.type = PretzelType::Type3_2A;
    v.fibered = true;  // no antiparallel tangle can violate the |m| = 2 rule
    v.fiber_is_seifert_surface = true;
    v.trace.push_back("unequal tangle counts with no antiparallel tangle");
    return v;
  }
  if (pc.delta() == 0) {
    AuxiliaryLink aux = auxiliary_link(d);
    if (is_even_alternating(aux.tangles)) {
      v.type = PretzelType::Type3Min;
      int best = 0, count = 0;
      for (int n : code.tangles) {
        int a = std::abs(n);
        if (count == 0 || a < best) best = a, count = 1;
        else if (a == best) ++count;
      }
      v.fibered = (count == 1);
      v.trace.push_back(v.fibered ? "unique tangle of minimal absolute value"
                                  : "no unique tangle of minimal absolute value");
      return v;
    }
    v.type = PretzelType::Type3_2B;
    FiberednessVerdict inner = decide(aux.tangles, depth + 1);
    v.fibered = inner.fibered;
    v.trace = std::move(inner.trace);
    return v;
  }
  v.type = PretzelType::Type3_2A;
  v.fibered = false;
  v.trace.push_back("positive/negative tangle counts differ by more than two");
  return v;
}

}  // namespace

AuxiliaryLink auxiliary_link(const OrientedDiagram& diagram) {
  AuxiliaryLink out;
  bool any_parallel = false;
  for (int i = 0; i < diagram.size(); ++i) {
    int n = diagram.code[i];
    if (diagram.parallel(i)) {
      any_parallel = true;
      if (std::abs(n) > 1) out.tangles.tangles.push_back(n > 0 ? -2 : 2);
    } else {
      out.tangles.tangles.push_back(n);
    }
  }
  if (!any_parallel)
    throw type1_input_error("Type1Input: " + render(diagram.code) +
                            " has no parallel tangle, so no auxiliary link");
  return out;
}

PretzelType pretzel_type(const OrientedDiagram& diagram) {
  if (diagram.component_count != 1)
    throw not_a_knot_error("NotAKnot: " + render(diagram.code));
  ParallelCounts pc = parallel_counts(diagram);
  const bool anti = has_antiparallel(diagram);
  if (pc.positive + pc.negative == 0) return PretzelType::Type1;
  if (pc.delta() != 0) return anti ? PretzelType::Type2A : PretzelType::Type3_2A;
  AuxiliaryLink aux = auxiliary_link(diagram);
  if (is_even_alternating(aux.tangles)) {
    if (anti)
      throw non_minimal_error("NonMinimal: " + render(diagram.code) +
                              " has alternating auxiliary link " + render(aux.tangles));
    return PretzelType::Type3Min;
  }
  return anti ? PretzelType::Type2B : PretzelType::Type3_2B;
}

FiberednessVerdict is_fibered(const PretzelCode& code) {
  if (component_count(code) != 1)
    throw not_a_knot_error("NotAKnot: " + render(code));
  return decide(code, 0);
}

}  // namespace pretzel
