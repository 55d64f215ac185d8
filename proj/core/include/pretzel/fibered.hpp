#pragma once
// Fiberedness of oriented pretzel knots via Gabai's algorithm: type
// classification, auxiliary-link construction, and the per-type rules.

#include <string>
#include <vector>

#include "pretzel/diagram.hpp"

namespace pretzel {

enum class PretzelType { Type1, Type2A, Type2B, Type3_2A, Type3_2B, Type3Min };

std::string to_string(PretzelType type);

struct type1_input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The auxiliary link L': each parallel tangle m with |m| > 1 becomes
// -2*sign(m), length-one parallel tangles are dropped, antiparallel tangles
// are kept verbatim, order preserved.
struct AuxiliaryLink {
  PretzelCode tangles;
};

// Throws type1_input_error when the diagram has no parallel tangle.
AuxiliaryLink auxiliary_link(const OrientedDiagram& diagram);

// Classifies per the algorithm's dispatch.  Throws non_minimal_error for the
// equal-count case whose auxiliary link alternates (such presentations cancel
// to a shorter code).
PretzelType pretzel_type(const OrientedDiagram& diagram);

struct FiberednessVerdict {
  PretzelType type = PretzelType::Type1;
  bool fibered = false;
  bool fiber_is_seifert_surface = false;
  std::vector<std::string> trace;
};

FiberednessVerdict is_fibered(const PretzelCode& code);

}  // namespace pretzel
