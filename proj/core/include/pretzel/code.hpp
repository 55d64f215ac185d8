#pragma once
// Pretzel notation: parsing, syntactic normalization, component counting.

#include <stdexcept>
#include <string>
#include <vector>

namespace pretzel {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_a_knot_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct non_minimal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// An ordered list of nonzero half-twist counts (n_1,...,n_r).
struct PretzelCode {
  std::vector<int> tangles;

  PretzelCode() = default;
  explicit PretzelCode(std::vector<int> t) : tangles(std::move(t)) {}
  PretzelCode(std::initializer_list<int> t) : tangles(t) {}

  int size() const { return static_cast<int>(tangles.size()); }
  int operator[](int i) const { return tangles[i]; }
  bool operator==(const PretzelCode&) const = default;
  auto operator<=>(const PretzelCode&) const = default;
};

// Grammar: "(" int ("," int)* ")" with optional whitespace, each int nonzero.
PretzelCode parse_pretzel(const std::string& text);

// Canonical rendering: (n1,n2,...,nr) with no spaces.
std::string render(const PretzelCode& code);

// Cancels {+1,-1} pairs; survivors keep their relative order.  The result may
// be empty (total cancellation: the unknot).
PretzelCode normalize(const PretzelCode& code);

// False if the code contains a {+1,-1} pair or a {+-1,-+2} pair, i.e. admits
// a pretzel presentation with fewer strands.
bool is_minimal_presentation(const PretzelCode& code);

struct ReducedForm {
  enum Kind { Unknot, TorusKnot, Pretzel } kind = Pretzel;
  int torus_q = 0;  // T(2, torus_q) when kind == TorusKnot
  PretzelCode code;

  bool operator==(const ReducedForm&) const = default;
};

// Length-0/1 codes are unknots, length-2 codes are T(2, a+b); longer codes
// pass through unchanged.  Expects a normalized code.
ReducedForm reduce_small(const PretzelCode& code);

// Number of link components of the standard pretzel closure.
int component_count(const PretzelCode& code);

PretzelCode mirror(const PretzelCode& code);

}  // namespace pretzel
