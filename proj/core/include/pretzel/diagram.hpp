#pragma once
// Orientation tracing of the standard pretzel projection and tangle roles.

#include "pretzel/code.hpp"

namespace pretzel {

enum class RoleKind { Parallel, Antiparallel };

struct TangleRole {
  RoleKind kind = RoleKind::Antiparallel;
  int sign = +1;  // sign of the tangle's half twists

  bool operator==(const TangleRole&) const = default;
};

/// A pretzel code together with the traced strand directions of its standard
/// projection.  tl_down[i] records whether the strand at the top-left port of
/// tangle i flows downward; for a parallel tangle both strands share that
/// direction.  The decorated edge is the bottom-most edge of the closure.
struct OrientedDiagram {
  PretzelCode code;
  std::vector<TangleRole> roles;
  std::vector<bool> tl_down;
  int component_count = 1;

  int size() const { return code.size(); }
  bool parallel(int i) const { return roles[i].kind == RoleKind::Parallel; }

  // Same diagram with the global orientation of K reversed.
  OrientedDiagram reversed() const;
};

// Traces the knot and fixes the global orientation so that the first parallel
// tangle has both strands pointing downward (or, failing that, the top-left
// strand of tangle 1 points downward).  Throws not_a_knot_error on links.
OrientedDiagram orient(const PretzelCode& code);

}  // namespace pretzel
