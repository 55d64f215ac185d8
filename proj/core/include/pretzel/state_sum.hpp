#pragma once
// Kauffman states as spanning-tree pairs, the (A, M) bigrading, and the
// Alexander polynomial state sum.

#include <functional>
#include <optional>

#include "pretzel/checkerboard.hpp"
#include "pretzel/laurent.hpp"

namespace pretzel {

struct no_unique_minimum_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A black spanning tree of the theta-shaped black graph: one trunk tangle
/// whose full path is kept, and one omitted edge index per other tangle
/// (black edges of tangle i are indexed 0..|n_i|-1 from the bottom).  The
/// dual white tree consists of the white edges at the omitted crossings.
struct KauffmanState {
  int trunk = 0;
  std::vector<int> omit;  // omit[trunk] == -1

  bool operator==(const KauffmanState&) const = default;
};

struct Bigrading {
  int A = 0;  // Alexander grading
  int M = 0;  // Maslov grading
  bool operator==(const Bigrading&) const = default;
};

// Visits every state exactly once: trunk ascending, omitted indices in
// lexicographic order.  Returning false from the visitor stops early.
void for_each_state(const CheckerboardGraphs& graphs,
                    const std::function<bool(const KauffmanState&)>& visit);

std::vector<KauffmanState> enumerate_states(const CheckerboardGraphs& graphs);

Bigrading bigrading(const KauffmanState& state, const CheckerboardGraphs& graphs);

int trunk_of(const KauffmanState& state);

// Delta_K(t) = Sum_x (-1)^{M(x)} t^{A(x)} over all states of the decorated
// standard projection.  Throws not_a_knot_error on links.
LaurentPolynomial alexander(const PretzelCode& code);
LaurentPolynomial alexander(const OrientedDiagram& diagram);

struct MinimalStates {
  int a_min = 0;
  std::vector<KauffmanState> states;
};
MinimalStates minimal_states(const PretzelCode& code);
MinimalStates minimal_states(const CheckerboardGraphs& graphs);

// The r-l-1 trades of the unique minimal state (l = number of length-one
// non-trunk tangles).  Throws no_unique_minimum_error when the minimal state
// is not unique.
std::vector<KauffmanState> trades_of(const PretzelCode& code);
std::vector<KauffmanState> trades_of(const CheckerboardGraphs& graphs);

}  // namespace pretzel
