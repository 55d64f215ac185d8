#include "pretzel/code.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace pretzel {

namespace {
void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}
}  // namespace

PretzelCode parse_pretzel(const std::string& text) {
  size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '(')
    throw parse_error("expected '(' at position " + std::to_string(i));
  ++i;
  std::vector<int> tangles;
  for (;;) {
    skip_ws(text, i);
    size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits)
      throw parse_error("expected integer at position " + std::to_string(start));
    long v = std::strtol(text.substr(start, i - start).c_str(), nullptr, 10);
    if (v == 0)
      throw parse_error("ZeroTangle at index " + std::to_string(tangles.size()));
    tangles.push_back(static_cast<int>(v));
    skip_ws(text, i);
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ')') {
      ++i;
      break;
    }
    throw parse_error("expected ',' or ')' at position " + std::to_string(i));
  }
  skip_ws(text, i);
  if (i != text.size())
    throw parse_error("trailing characters at position " + std::to_string(i));
  return PretzelCode(std::move(tangles));
}

std::string render(const PretzelCode& code) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < code.size(); ++i) {
    if (i) os << ',';
    os << code[i];
  }
  os << ')';
  return os.str();
}

PretzelCode normalize(const PretzelCode& code) {
  int pos = 0, neg = 0;
  for (int n : code.tangles) {
    if (n == 1) ++pos;
    if (n == -1) ++neg;
  }
  int cancel = std::min(pos, neg);
  std::vector<int> out;
  out.reserve(code.tangles.size());
  int drop_pos = cancel, drop_neg = cancel;
  for (int n : code.tangles) {
    if (n == 1 && drop_pos > 0) {
      --drop_pos;
      continue;
    }
    if (n == -1 && drop_neg > 0) {
      --drop_neg;
      continue;
    }
    out.push_back(n);
  }
  return PretzelCode(std::move(out));
}

bool is_minimal_presentation(const PretzelCode& code) {
  bool p1 = false, m1 = false, p2 = false, m2 = false;
  for (int n : code.tangles) {
    if (n == 1) p1 = true;
    if (n == -1) m1 = true;
    if (n == 2) p2 = true;
    if (n == -2) m2 = true;
  }
  if (p1 && m1) return false;
  if (p1 && m2) return false;
  if (m1 && p2) return false;
  return true;
}

ReducedForm reduce_small(const PretzelCode& code) {
  ReducedForm rf;
  if (code.size() <= 1) {
    rf.kind = ReducedForm::Unknot;
    return rf;
  }
  if (code.size() == 2) {
    rf.kind = ReducedForm::TorusKnot;
    rf.torus_q = code[0] + code[1];
    if (rf.torus_q == 0) rf.kind = ReducedForm::Unknot;
    return rf;
  }
  rf.kind = ReducedForm::Pretzel;
  rf.code = code;
  return rf;
}

int component_count(const PretzelCode& code) {
  // Trace the closure as a permutation of the 2r top endpoints.  An odd
  // tangle transposes its two strand ends top-to-bottom, an even one does
  // not; neighbouring tangles are joined right-top to left-top.
  const int r = code.size();
  if (r == 0) return 1;
  // Endpoint ids: TL_i = 4i, TR_i = 4i+1, BL_i = 4i+2, BR_i = 4i+3.
  std::vector<int> link(4 * r, -1);
  auto join = [&](int a, int b) { link[a] = b; link[b] = a; };
  std::vector<int> through(4 * r, -1);
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
    join(4 * i + 1, 4 * j);      // TR_i - TL_{i+1}
    join(4 * i + 3, 4 * j + 2);  // BR_i - BL_{i+1}
  }
  std::vector<char> seen(4 * r, 0);
  int components = 0;
  for (int s = 0; s < 4 * r; ++s) {
    if (seen[s]) continue;
    ++components;
    int v = s;
    while (!seen[v]) {
      seen[v] = 1;
      int w = through[v];
      seen[w] = 1;
      v = link[w];
    }
  }
  return components;
}

PretzelCode mirror(const PretzelCode& code) {
  PretzelCode m = code;
  for (int& n : m.tangles) n = -n;
  return m;
}

}  // namespace pretzel
