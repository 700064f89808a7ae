#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbibraid/params.hpp"
#include "orbibraid/words.hpp"

namespace orbibraid {

// Elements of F_r * Z_{m_1} * ... * Z_{m_N} in syllable normal form.
// Free syllables carry a nonzero exponent; cyclic syllables carry an
// exponent in 1..m_nu-1. Adjacent syllables never share a base.
struct Syllable {
  bool cyclic = false;
  int idx = 0;        // free: 1..freeRank, cyclic: 1..N
  long long exp = 0;

  bool operator==(const Syllable& o) const {
    return cyclic == o.cyclic && idx == o.idx && exp == o.exp;
  }
};

class FreeProductElement {
 public:
  FreeProductElement(int free_rank, std::vector<int> orders, int x_count = -1)
      : free_rank_(free_rank),
        x_count_(x_count < 0 ? free_rank : x_count),
        orders_(std::move(orders)) {
    if (free_rank_ < 0) throw std::invalid_argument("freeprod: negative rank");
    if (x_count_ > free_rank_) throw std::invalid_argument("freeprod: x_count > rank");
    for (int m : orders_)
      if (m < 2) throw std::invalid_argument("freeprod: orders must be >= 2");
  }

  int free_rank() const { return free_rank_; }
  int cyclic_count() const { return static_cast<int>(orders_.size()); }
  int order(int nu) const { return orders_.at(static_cast<size_t>(nu) - 1); }
  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  size_t syllable_length() const { return syl_.size(); }

  void push_free(int idx, long long exp) {
    if (idx < 1 || idx > free_rank_) throw std::out_of_range("freeprod: free index");
    push({false, idx, exp});
  }

  void push_cyclic(int nu, long long exp) {
    if (nu < 1 || nu > cyclic_count()) throw std::out_of_range("freeprod: cyclic index");
    push({true, nu, exp});
  }

  void push(Syllable s) {
    if (s.cyclic) {
      int m = order(s.idx);
      s.exp = ((s.exp % m) + m) % m;
      if (s.exp == 0) return;
    } else if (s.exp == 0) {
      return;
    }
    if (!syl_.empty() && syl_.back().cyclic == s.cyclic && syl_.back().idx == s.idx) {
      Syllable& last = syl_.back();
      last.exp += s.exp;
      if (s.cyclic) {
        int m = order(s.idx);
        last.exp = ((last.exp % m) + m) % m;
      }
      if (last.exp == 0) syl_.pop_back();
      return;
    }
    syl_.push_back(s);
  }

  bool operator==(const FreeProductElement& o) const {
    return free_rank_ == o.free_rank_ && orders_ == o.orders_ && syl_ == o.syl_;
  }
  bool operator!=(const FreeProductElement& o) const { return !(*this == o); }

  // Canonical text: free generators print as x1..x_{x_count} then
  // y1..y_{rank-x_count}; cyclic generators print as z_nu. Identity is "1".
  std::string to_string() const {
    if (syl_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Syllable& s : syl_) {
      if (!first) os << ' ';
      first = false;
      if (s.cyclic)
        os << 'z' << s.idx;
      else if (s.idx <= x_count_)
        os << 'x' << s.idx;
      else
        os << 'y' << (s.idx - x_count_);
      if (s.exp != 1) os << '^' << s.exp;
    }
    return os.str();
  }

 private:
  int free_rank_;
  int x_count_;
  std::vector<int> orders_;
  std::vector<Syllable> syl_;
};

inline FreeProductElement nf_multiply(const FreeProductElement& a, const FreeProductElement& b) {
  if (a.free_rank() != b.free_rank())
    throw std::invalid_argument("freeprod: rank mismatch");
  FreeProductElement r = a;
  for (const Syllable& s : b.syllables()) r.push(s);
  return r;
}

inline FreeProductElement nf_inverse(const FreeProductElement& a) {
  FreeProductElement r = a;
  // rebuild in reverse with negated exponents
  std::vector<Syllable> rev(a.syllables().rbegin(), a.syllables().rend());
  r = FreeProductElement(a.free_rank(), [&] {
    std::vector<int> os;
    for (int nu = 1; nu <= a.cyclic_count(); ++nu) os.push_back(a.order(nu));
    return os;
  }());
  for (Syllable s : rev) {
    s.exp = -s.exp;
    r.push(s);
  }
  return r;
}

// Evaluation of words over the x/y/z alphabet: x_j are the first n-1 free
// generators, y_lam the next L, z_nu the cyclic generators.
class FreeProductEvaluator {
 public:
  explicit FreeProductEvaluator(const GroupParams& p)
      : p_(p),
        fam_x_(FamilyRegistry::id("x")),
        fam_y_(FamilyRegistry::id("y")),
        fam_z_(FamilyRegistry::id("z")) {
    p.validate();
  }

  FreeProductElement identity() const {
    return FreeProductElement(p_.n - 1 + p_.L, p_.m, p_.n - 1);
  }

  FreeProductElement eval(const Word& w) const {
    FreeProductElement e = identity();
    for (const Letter& l : w) push_letter(e, l);
    return e;
  }

  void push_letter(FreeProductElement& e, const Letter& l) const {
    if (l.fam == fam_x_) {
      if (l.i < 1 || l.i > p_.n - 1) throw std::out_of_range("x index out of range");
      e.push_free(l.i, l.sgn);
    } else if (l.fam == fam_y_) {
      if (l.i < 1 || l.i > p_.L) throw std::out_of_range("y index out of range");
      e.push_free(p_.n - 1 + l.i, l.sgn);
    } else if (l.fam == fam_z_) {
      e.push_cyclic(l.i, l.sgn);
    } else {
      throw std::invalid_argument("letter '" + l.to_string() +
                                  "' is not an x/y/z generator");
    }
  }

  // Normal form of a word, re-expressed as a word over x/y/z letters.
  Word normal_form_word(const Word& w) const {
    FreeProductElement e = eval(w);
    Word out;
    for (const Syllable& s : e.syllables()) {
      Letter base = s.cyclic ? Letter("z", s.idx)
                  : s.idx <= p_.n - 1 ? Letter("x", s.idx)
                                      : Letter("y", s.idx - (p_.n - 1));
      long long k = s.exp;
      if (k < 0) base.sgn = -1;
      for (long long c = std::abs(k); c > 0; --c) out.push_back(base);
    }
    return out;
  }

  const GroupParams& params() const { return p_; }

 private:
  GroupParams p_;
  int fam_x_, fam_y_, fam_z_;
};

}  // namespace orbibraid
