#pragma once
// L-space obstruction pipeline: fiberedness, Alexander coefficient and
// determinant obstructions, family matching, and the exhaustive check that
// every surviving pretzel knot lies in a known surgery family.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pretzel/fibered.hpp"
#include "pretzel/invariants.hpp"
#include "pretzel/state_sum.hpp"

namespace pretzel {

// True iff every coefficient satisfies |a_s| <= 1.
bool coefficient_obstruction(const LaurentPolynomial& poly);

enum class Family { None, NegTwoThreeQ, Torus2, HFKException };

std::string to_string(Family family);

struct FamilyMatch {
  Family family = Family::None;
  int param = 0;  // q for (-2,3,q); n for T(2,2n+1)
  std::string str() const;
};

// Searches the orbit of the code under tangle permutation, reversal, and
// mirroring for (-2,3,q) with odd q >= 1 and for torus knots T(2,2n+1)
// (codes with at most two tangles, all-ones codes, and the sporadic
// (1,-3,-3) = T(2,3)).  The knot Floer exception is not a family here; see
// is_hfk_exception.
FamilyMatch match_family(const PretzelCode& code);

// True iff the code is (3,-5,3,-2) up to permutation and mirroring.
bool is_hfk_exception(const PretzelCode& code);

// Knot Floer homology of (3,-5,3,-2) over the two-element field, stored as
// (maslov, alexander) -> dimension.
struct HFKTable {
  std::map<std::pair<int, int>, int> entries;
  int dim(int maslov, int alexander) const;
  BigInt euler_characteristic(int alexander) const;
  int column_dimension(int alexander) const;
};

const HFKTable& hfk_exception_table();

enum class LSpaceVerdict { LSpaceKnot, NotLSpaceKnot };

struct LSpaceReport {
  PretzelCode code;
  PretzelType type = PretzelType::Type1;
  bool fibered = false;
  bool coeff_ok = false;
  bool det_ok = false;
  LaurentPolynomial delta;
  BigInt det;
  std::optional<int> fiber_genus;  // deg Delta when fibered
  FamilyMatch family;
  LSpaceVerdict verdict = LSpaceVerdict::NotLSpaceKnot;
  std::string reason;
};

LSpaceReport classify_lspace(const PretzelCode& code);

struct counterexample_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationRow {
  std::string code;
  std::string type;
  bool fibered = false;
  std::optional<int> genus;
  std::string det;
  bool coeff_ok = false;
  std::string family;
  std::string verdict;
  std::string elimination_reason;
};

struct VerificationReport {
  int max_tangles = 0;
  int max_twist = 0;
  long long candidates = 0;  // canonical codes enumerated (knots and not)
  std::vector<VerificationRow> rows;  // one per canonical knot code, sorted
  std::map<std::string, long long> eliminated_by;
  std::vector<std::string> survivors;        // codes matching a family
  std::vector<std::string> counterexamples;  // must stay empty

  std::string to_csv() const;
  std::string to_json() const;
};

// Enumerates canonical knot codes with 3 <= r <= max_tangles and
// 1 <= |n_i| <= max_twist, runs the pipeline on each, and throws
// counterexample_error if any code passes every obstruction without matching
// a family.  workers = 0 picks the hardware concurrency.
VerificationReport verify_theorem1(int max_tangles, int max_twist, int workers = 0);

}  // namespace pretzel
