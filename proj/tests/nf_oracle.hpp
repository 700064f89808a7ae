#pragma once

// Independent normal-form oracle for F_r * Z_{m_1} * ... * Z_{m_N}, kept
// deliberately separate from the library implementation: elements are flat
// atom sequences rewritten to a fixpoint by full passes, not an incremental
// syllable stack.

#include <string>
#include <vector>

namespace nf_oracle {

struct Atom {
  bool cyclic;
  int idx;
  long long exp;
};

using Raw = std::vector<Atom>;

inline Raw fixpoint(Raw v, const std::vector<int>& orders) {
  bool changed = true;
  while (changed) {
    changed = false;
    Raw next;
    for (const Atom& a : v) {
      Atom cur = a;
      if (cur.cyclic) {
        int m = orders[static_cast<size_t>(cur.idx) - 1];
        cur.exp = ((cur.exp % m) + m) % m;
      }
      if (cur.exp == 0) {
        changed = true;
        continue;
      }
      if (!next.empty() && next.back().cyclic == cur.cyclic && next.back().idx == cur.idx) {
        next.back().exp += cur.exp;
        changed = true;
        continue;
      }
      next.push_back(cur);
    }
    // trailing merges may have produced new zero or mergeable atoms; loop
    v = next;
  }
  return v;
}

inline std::string canon(const Raw& v) {
  std::string s;
  for (const Atom& a : v) {
    s += a.cyclic ? 'z' : 'f';
    s += std::to_string(a.idx);
    s += '^';
    s += std::to_string(a.exp);
    s += ' ';
  }
  return s.empty() ? "1" : s;
}

// Appends one generator power and renormalizes from scratch.
inline Raw push(Raw v, bool cyclic, int idx, long long exp, const std::vector<int>& orders) {
  v.push_back({cyclic, idx, exp});
  return fixpoint(std::move(v), orders);
}

}  // namespace nf_oracle
