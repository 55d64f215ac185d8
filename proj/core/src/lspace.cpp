#include "pretzel/lspace.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace pretzel {

bool coefficient_obstruction(const LaurentPolynomial& poly) {
  for (const BigInt& c : poly.raw_coeffs())
    if (c > 1 || c < -1) return false;
  return true;
}

std::string to_string(Family family) {
  switch (family) {
    case Family::None: return "None";
    case Family::NegTwoThreeQ: return "NegTwoThreeQ";
    case Family::Torus2: return "Torus2";
    case Family::HFKException: return "HFKException";
  }
  throw internal_error("unknown family");
}

std::string FamilyMatch::str() const {
  switch (family) {
    case Family::None: return "None";
    case Family::NegTwoThreeQ: return "(-2,3," + std::to_string(param) + ")";
    case Family::Torus2: return "T(2," + std::to_string(2 * param + 1) + ")";
    case Family::HFKException: return "(3,-5,3,-2)";
  }
  throw internal_error("unknown family");
}

namespace {

std::vector<int> sorted_tangles(const PretzelCode& code) {
  std::vector<int> v = code.tangles;
  std::sort(v.begin(), v.end());
  return v;
}

bool multiset_is_neg_two_three_q(std::vector<int> v, int* q) {
  if (v.size() != 3) return false;
  auto take = [&](int x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) return false;
    v.erase(it);
    return true;
  };
  if (!take(-2) || !take(3)) return false;
  int rest = v.front();
  if (rest < 1 || rest % 2 == 0) return false;
  *q = rest;
  return true;
}

}  // namespace

bool is_hfk_exception(const PretzelCode& code) {
  std::vector<int> v = sorted_tangles(code);
  return v == std::vector<int>{-5, -2, 3, 3} || v == std::vector<int>{-3, -3, 2, 5};
}

FamilyMatch match_family(const PretzelCode& code) {
  FamilyMatch m;
  ReducedForm rf = reduce_small(code);
  if (rf.kind == ReducedForm::Unknot) {
    m.family = Family::Torus2;
    m.param = 0;
    return m;
  }
  if (rf.kind == ReducedForm::TorusKnot) {
    if (std::abs(rf.torus_q) % 2 == 0) return m;  // two-component link
    m.family = Family::Torus2;
    m.param = (std::abs(rf.torus_q) - 1) / 2;
    return m;
  }
  const int r = code.size();
  bool all_one = true, all_minus = true;
  for (int n : code.tangles) {
    all_one = all_one && n == 1;
    all_minus = all_minus && n == -1;
  }
  if ((all_one || all_minus) && r % 2 == 1) {
    m.family = Family::Torus2;
    m.param = (r - 1) / 2;
    return m;
  }
  {
    // Sporadic isotopy: (1,-3,-3) is the trefoil T(2,3).
    std::vector<int> v = sorted_tangles(code);
    if (v == std::vector<int>{-3, -3, 1} || v == std::vector<int>{-1, 3, 3}) {
      m.family = Family::Torus2;
      m.param = 1;
      return m;
    }
  }
  int q = 0;
  if (multiset_is_neg_two_three_q(sorted_tangles(code), &q) ||
      multiset_is_neg_two_three_q(sorted_tangles(mirror(code)), &q)) {
    m.family = Family::NegTwoThreeQ;
    m.param = q;
    return m;
  }
  return m;
}

const HFKTable& hfk_exception_table() {
  static const HFKTable table = [] {
    HFKTable t;
    const int data[][3] = {
        // maslov, alexander, dimension
        {4, 3, 1},  {3, 2, 3},   {2, 1, 4},   {2, 2, 2},
        {1, 0, 3},  {1, 1, 4},   {0, -1, 4},  {0, 0, 4},
        {-1, -2, 3}, {-1, -1, 4}, {-2, -3, 1}, {-2, -2, 2},
    };
    for (const auto& e : data) t.entries[{e[0], e[1]}] = e[2];
    return t;
  }();
  return table;
}

int HFKTable::dim(int maslov, int alexander) const {
  auto it = entries.find({maslov, alexander});
  return it == entries.end() ? 0 : it->second;
}

BigInt HFKTable::euler_characteristic(int alexander) const {
  BigInt chi = 0;
  for (const auto& [key, d] : entries)
    if (key.second == alexander) chi += (key.first % 2 == 0) ? d : -d;
  return chi;
}

int HFKTable::column_dimension(int alexander) const {
  int total = 0;
  for (const auto& [key, d] : entries)
    if (key.second == alexander) total += d;
  return total;
}

namespace {

LaurentPolynomial torus_alexander(int q) {
  // Delta of T(2,q), q odd: alternating +-1 coefficients centred at 0.
  q = std::abs(q);
  std::vector<BigInt> coeffs(q);
  for (int i = 0; i < q; ++i) coeffs[i] = (i % 2 == 0) ? 1 : -1;
  return LaurentPolynomial(-(q - 1) / 2, std::move(coeffs));
}

std::string coefficient_reason(const LaurentPolynomial& p) {
  for (int e = p.min_exp(); e <= p.max_exp(); ++e) {
    BigInt c = p.coeff(e);
    if (c > 1 || c < -1) {
      std::ostringstream os;
      os << "coefficient a_" << e << " = " << c;
      return os.str();
    }
  }
  throw internal_error("coefficient_reason called on a +-1 polynomial");
}

}  // namespace

LSpaceReport classify_lspace(const PretzelCode& code) {
  if (component_count(code) != 1)
    throw not_a_knot_error("NotAKnot: " + render(code));
  LSpaceReport rep;
  rep.code = code;
  rep.family = match_family(code);
  if (is_hfk_exception(code)) rep.family = FamilyMatch{Family::HFKException, 0};

  ReducedForm rf = reduce_small(code);
  if (rf.kind != ReducedForm::Pretzel) {
    rep.fibered = true;
    rep.delta = rf.kind == ReducedForm::Unknot ? LaurentPolynomial::constant(1)
                                               : torus_alexander(rf.torus_q);
    rep.det = rf.kind == ReducedForm::Unknot ? 1 : std::abs(rf.torus_q);
    rep.fiber_genus = rep.delta.degree();
    rep.coeff_ok = true;
    rep.det_ok = true;
    rep.verdict = LSpaceVerdict::LSpaceKnot;
    rep.reason = rep.family.str();
    return rep;
  }

  OrientedDiagram diagram = orient(code);
  FiberednessVerdict fv = is_fibered(code);
  rep.type = fv.type;
  rep.fibered = fv.fibered;
  rep.delta = alexander(diagram);
  rep.coeff_ok = coefficient_obstruction(rep.delta);
  rep.det = determinant_formula(code);
  if (rep.fibered) {
    rep.fiber_genus = rep.delta.degree();
    DetVerdict dv = det_obstruction(code, *rep.fiber_genus);
    rep.det_ok = !dv.violated;
  } else {
    rep.det_ok = true;  // no certified genus, obstruction not applicable
  }

  if (rep.family.family == Family::NegTwoThreeQ || rep.family.family == Family::Torus2) {
    rep.verdict = LSpaceVerdict::LSpaceKnot;
    rep.reason = rep.family.str();
    return rep;
  }
  rep.verdict = LSpaceVerdict::NotLSpaceKnot;
  if (rep.family.family == Family::HFKException) {
    rep.reason = "HFK dimension >= 2 in some Alexander grading";
  } else if (!rep.fibered) {
    rep.reason = "not fibered";
  } else if (!rep.coeff_ok) {
    rep.reason = coefficient_reason(rep.delta);
  } else if (!rep.det_ok) {
    std::ostringstream os;
    os << "det " << rep.det << " > 2g+1 = " << 2 * *rep.fiber_genus + 1;
    rep.reason = os.str();
  } else {
    rep.reason = "passes all obstructions but matches no family";
  }
  return rep;
}

namespace {

// Lexicographic minimum over rotations, reversal, and mirroring -- the
// symmetries realized by isotopies of the pretzel closure.  Arbitrary tangle
// permutations are mutations and can change the fibering verdict, so they do
// not merge classes here.
bool is_canonical(const std::vector<int>& v) {
  const int r = static_cast<int>(v.size());
  std::vector<int> w(r);
  for (int mir = 0; mir < 2; ++mir) {
    for (int rev = 0; rev < 2; ++rev) {
      for (int rot = 0; rot < r; ++rot) {
        for (int i = 0; i < r; ++i) {
          int src = rev ? (rot - i + 2 * r) % r : (rot + i) % r;
          w[i] = mir ? -v[src] : v[src];
        }
        if (std::lexicographical_compare(w.begin(), w.end(), v.begin(), v.end()))
          return false;
      }
    }
  }
  return true;
}

struct CodeOutcome {
  bool is_knot = false;
  VerificationRow row;
  std::string bucket;      // eliminated_by key
  bool survivor = false;
  bool counterexample = false;
};

CodeOutcome process_code(const PretzelCode& code) {
  CodeOutcome out;
  if (component_count(code) != 1) return out;
  out.is_knot = true;
  VerificationRow& row = out.row;
  row.code = render(code);
  if (!is_minimal_presentation(code)) {
    row.verdict = "skipped";
    row.elimination_reason = "non-minimal presentation";
    out.bucket = "non-minimal presentation";
    return out;
  }
  LSpaceReport rep;
  try {
    rep = classify_lspace(code);
  } catch (const non_minimal_error&) {
    row.verdict = "skipped";
    row.elimination_reason = "non-minimal presentation";
    out.bucket = "non-minimal presentation";
    return out;
  }
  row.type = to_string(rep.type);
  row.fibered = rep.fibered;
  row.genus = rep.fiber_genus;
  {
    std::ostringstream os;
    os << rep.det;
    row.det = os.str();
  }
  row.coeff_ok = rep.coeff_ok;
  row.family = to_string(rep.family.family);
  row.verdict = rep.verdict == LSpaceVerdict::LSpaceKnot ? "LSpaceKnot" : "NotLSpaceKnot";
  row.elimination_reason = rep.reason;
  const bool passes = rep.fibered && rep.coeff_ok && rep.det_ok;
  if (!passes) {
    if (!rep.fibered)
      out.bucket = "not fibered";
    else if (!rep.coeff_ok)
      out.bucket = "coefficient";
    else
      out.bucket = "determinant";
    return out;
  }
  switch (rep.family.family) {
    case Family::NegTwoThreeQ:
    case Family::Torus2:
      out.bucket = "family";
      out.survivor = true;
      break;
    case Family::HFKException:
      out.bucket = "hfk-exception";
      out.survivor = true;
      break;
    case Family::None:
      out.bucket = "counterexample";
      out.counterexample = true;
      break;
  }
  return out;
}

}  // namespace

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "code,type,fibered,genus,det,coeff_ok,family,verdict,elimination_reason\n";
  for (const VerificationRow& r : rows) {
    os << '"' << r.code << "\"," << r.type << ',' << (r.fibered ? "true" : "false") << ','
       << (r.genus ? std::to_string(*r.genus) : "") << ',' << r.det << ','
       << (r.coeff_ok ? "true" : "false") << ',' << r.family << ',' << r.verdict << ",\""
       << r.elimination_reason << "\"\n";
  }
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["max_tangles"] = max_tangles;
  j["max_twist"] = max_twist;
  j["candidates"] = candidates;
  j["eliminated_by"] = eliminated_by;
  j["survivors"] = survivors;
  j["counterexamples"] = counterexamples;
  nlohmann::json rows_json = nlohmann::json::array();
  for (const VerificationRow& r : rows) {
    nlohmann::json row;
    row["code"] = r.code;
    row["type"] = r.type;
    row["fibered"] = r.fibered;
    if (r.genus)
      row["genus"] = *r.genus;
    else
      row["genus"] = nullptr;
    row["det"] = r.det;
    row["coeff_ok"] = r.coeff_ok;
    row["family"] = r.family;
    row["verdict"] = r.verdict;
    row["elimination_reason"] = r.elimination_reason;
    rows_json.push_back(std::move(row));
  }
  j["rows"] = std::move(rows_json);
  return j.dump(2);
}

VerificationReport verify_theorem1(int max_tangles, int max_twist, int workers) {
  if (max_tangles < 3 || max_twist < 1)
    throw std::invalid_argument("verify_theorem1 needs max_tangles >= 3, max_twist >= 1");
  VerificationReport report;
  report.max_tangles = max_tangles;
  report.max_twist = max_twist;

  std::vector<PretzelCode> candidates;
  std::vector<int> values;
  for (int v = -max_twist; v <= max_twist; ++v)
    if (v != 0) values.push_back(v);
  for (int r = 3; r <= max_tangles; ++r) {
    std::vector<int> cur(r);
    std::function<void(int)> gen = [&](int pos) {
      if (pos == r) {
        if (is_canonical(cur)) candidates.emplace_back(cur);
        return;
      }
      for (int v : values) {
        cur[pos] = v;
        gen(pos + 1);
      }
    };
    gen(0);
  }
  report.candidates = static_cast<long long>(candidates.size());

  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
  }
  std::vector<CodeOutcome> outcomes(candidates.size());
  std::atomic<size_t> next{0};
  auto run = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= candidates.size()) break;
      outcomes[i] = process_code(candidates[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (std::thread& t : pool) t.join();

  for (const CodeOutcome& out : outcomes) {
    if (!out.is_knot) continue;
    report.rows.push_back(out.row);
    ++report.eliminated_by[out.bucket];
    if (out.survivor) report.survivors.push_back(out.row.code);
    if (out.counterexample) report.counterexamples.push_back(out.row.code);
  }
  if (!report.counterexamples.empty()) {
    std::string msg = "CounterexampleFound:";
    for (const std::string& c : report.counterexamples) msg += " " + c;
    throw counterexample_error(msg);
  }
  return report;
}

}  // namespace pretzel
