#include "pretzel/fox.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace pretzel {
namespace {

// Dense polynomial in t with integer coefficients, lowest exponent 0.
using Poly = std::vector<BigInt>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly c = a;
  if (b.size() > c.size()) c.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

// Exact division; Bareiss guarantees divisibility.
Poly exact_div(Poly a, const Poly& d) {
  if (a.empty()) return {};
  if (d.empty()) throw internal_error("division by zero polynomial");
  Poly q(a.size() - d.size() + 1);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    BigInt num = a[k + d.size() - 1];
    if (num % d.back() != 0) throw internal_error("non-exact polynomial division");
    BigInt c = num / d.back();
    q[k] = c;
    if (c != 0)
      for (size_t i = 0; i < d.size(); ++i) a[k + i] -= c * d[i];
  }
  for (const BigInt& c : a)
    if (c != 0) throw internal_error("non-exact polynomial division");
  return q;
}

// Fraction-free determinant (Bareiss) over Z[t].
Poly bareiss_det(std::vector<std::vector<Poly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return {BigInt(1)};
  int sign = 1;
  Poly prev = {BigInt(1)};
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].empty()) {
      int s = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].empty()) {
          s = i;
          break;
        }
      if (s < 0) return {};  // singular
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = exact_div(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), prev);
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  if (sign < 0)
    for (BigInt& c : det) c = -c;
  return det;
}

enum End { NW = 0, NE = 1, SW = 2, SE = 3 };

}  // namespace

LaurentPolynomial alexander_oracle(const PretzelCode& code) {
  if (component_count(code) != 1)
    throw not_a_knot_error("NotAKnot: " + render(code));
  const int r = code.size();
  std::vector<int> first(r), count(r);
  int total = 0;
  for (int i = 0; i < r; ++i) {
    first[i] = total;
    count[i] = std::abs(code[i]);
    total += count[i];
  }
  const int n_cross = total;

  auto end_id = [](int crossing, End e) { return 4 * crossing + e; };
  std::vector<int> link(4 * n_cross, -1);
  auto join = [&](int a, int b) { link[a] = b; link[b] = a; };
  // Vertical chains inside each tangle, then the pretzel closure arcs.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j + 1 < count[i]; ++j) {
      join(end_id(first[i] + j, SW), end_id(first[i] + j + 1, NW));
      join(end_id(first[i] + j, SE), end_id(first[i] + j + 1, NE));
    }
  for (int i = 0; i < r; ++i) {
    int j = (i + 1) % r;
    join(end_id(first[i], NE), end_id(first[j], NW));                          // top arcs
    join(end_id(first[i] + count[i] - 1, SE), end_id(first[j] + count[j] - 1, SW));
  }

  auto through = [](int end) {
    static const End partner[4] = {SE, SW, NE, NW};
    return 4 * (end / 4) + partner[end % 4];
  };
  // The NW-SE strand passes over at a positive tangle, under at a negative.
  auto is_over = [&](int crossing, int entry_end) {
    int tangle = 0;
    while (first[tangle] + count[tangle] <= crossing) ++tangle;
    bool on_main = (entry_end % 4 == NW || entry_end % 4 == SE);
    return code[tangle] > 0 ? on_main : !on_main;
  };
  // Planar direction of a passage from its entry corner (x right, y up).
  auto direction = [](int entry_end) -> std::pair<int, int> {
    switch (entry_end % 4) {
      case NW: return {1, -1};
      case SE: return {-1, 1};
      case NE: return {-1, -1};
      default: return {1, 1};  // SW
    }
  };

  // Walk the knot, cutting arcs at underpasses.
  struct Relation {
    int over = -1, under_in = -1, under_out = -1, sign = 0;
  };
  std::vector<Relation> rel(n_cross);
  std::vector<std::pair<int, int>> over_dir(n_cross), under_dir(n_cross);
  int entry = end_id(0, NW);
  int arc = 0;
  const int start = entry;
  do {
    int crossing = entry / 4;
    if (is_over(crossing, entry)) {
      rel[crossing].over = arc;
      over_dir[crossing] = direction(entry);
    } else {
      rel[crossing].under_in = arc;
      ++arc;
      rel[crossing].under_out = arc;
      under_dir[crossing] = direction(entry);
    }
    entry = link[through(entry)];
  } while (entry != start);
  // The walk ends on arc n_cross, which is the same arc it started on.
  const int n_arcs = n_cross;
  for (Relation& q : rel) {
    if (q.over == n_arcs) q.over = 0;
    if (q.under_in == n_arcs) q.under_in = 0;
    if (q.under_out == n_arcs) q.under_out = 0;
  }
  for (int c = 0; c < n_cross; ++c) {
    auto [ox, oy] = over_dir[c];
    auto [ux, uy] = under_dir[c];
    rel[c].sign = (ox * uy - oy * ux) > 0 ? +1 : -1;
  }

  // Fox derivative rows: positive crossing b = c a c^-1 gives
  // (1-t) on the over arc, t on the incoming under arc, -1 on the outgoing;
  // negative crossing b = c^-1 a c gives (t-1), 1, -t after scaling by t.
  const Poly one = {BigInt(1)};
  const Poly t = {BigInt(0), BigInt(1)};
  const Poly one_minus_t = {BigInt(1), BigInt(-1)};
  const Poly t_minus_one = {BigInt(-1), BigInt(1)};
  const Poly minus_one = {BigInt(-1)};
  const Poly minus_t = {BigInt(0), BigInt(-1)};
  std::vector<std::vector<Poly>> m(n_cross, std::vector<Poly>(n_arcs));
  auto add = [](Poly& dst, const Poly& src) { dst = sub(dst, sub({}, src)); };
  for (int c = 0; c < n_cross; ++c) {
    const Relation& q = rel[c];
    if (q.sign > 0) {
      add(m[c][q.over], one_minus_t);
      add(m[c][q.under_in], t);
      add(m[c][q.under_out], minus_one);
    } else {
      add(m[c][q.over], t_minus_one);
      add(m[c][q.under_in], one);
      add(m[c][q.under_out], minus_t);
    }
  }

  // Delete the last row and column.
  std::vector<std::vector<Poly>> minor(n_cross - 1, std::vector<Poly>(n_arcs - 1));
  for (int i = 0; i + 1 < n_cross; ++i)
    for (int j = 0; j + 1 < n_arcs; ++j) minor[i][j] = m[i][j];
  Poly det = bareiss_det(std::move(minor));
  if (det.empty()) throw internal_error("vanishing Alexander determinant");

  // Strip the unit and symmetrize.
  size_t low = 0;
  while (det[low] == 0) ++low;
  Poly p(det.begin() + low, det.end());
  int span = static_cast<int>(p.size()) - 1;
  if (span % 2 != 0) throw internal_error("odd-span Alexander polynomial");
  LaurentPolynomial out(-span / 2, std::vector<BigInt>(p.begin(), p.end()));
  if (!out.is_symmetric()) throw internal_error("asymmetric Alexander polynomial");
  BigInt at_one = out(BigInt(1));
  if (at_one != 1 && at_one != -1)
    throw internal_error("Alexander polynomial with |Delta(1)| != 1");
  if (at_one < 0) out = -out;
  return out;
}

}  // namespace pretzel
