#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbibraid/params.hpp"

namespace orbibraid {

// Generator families are interned so letters compare and hash cheaply.
class FamilyRegistry {
 public:
  static int id(const std::string& name) {
    auto& self = instance();
    auto it = self.by_name_.find(name);
    if (it != self.by_name_.end()) return it->second;
    int fresh = static_cast<int>(self.names_.size());
    self.names_.push_back(name);
    self.by_name_.emplace(name, fresh);
    return fresh;
  }
  static const std::string& name(int id) {
    auto& self = instance();
    return self.names_.at(static_cast<size_t>(id));
  }

 private:
  static FamilyRegistry& instance() {
    static FamilyRegistry r;
    return r;
  }
  std::vector<std::string> names_;
  std::map<std::string, int> by_name_;
};

// One generator occurrence. Single-index letters ("h1", "t2") keep j == 0;
// double-index letters ("a(3,1)") use both. sgn is +1 or -1.
struct Letter {
  int fam = 0;
  int i = 0;
  int j = 0;
  int sgn = 1;

  Letter() = default;
  Letter(const std::string& family, int idx, int sign = 1)
      : fam(FamilyRegistry::id(family)), i(idx), j(0), sgn(sign) {}
  Letter(const std::string& family, int idx1, int idx2, int sign)
      : fam(FamilyRegistry::id(family)), i(idx1), j(idx2), sgn(sign) {}

  Letter inverse() const {
    Letter l = *this;
    l.sgn = -l.sgn;
    return l;
  }
  Letter base() const {
    Letter l = *this;
    l.sgn = 1;
    return l;
  }
  bool same_base(const Letter& o) const {
    return fam == o.fam && i == o.i && j == o.j;
  }
  bool operator==(const Letter& o) const {
    return same_base(o) && sgn == o.sgn;
  }
  bool operator!=(const Letter& o) const { return !(*this == o); }

  const std::string& family() const { return FamilyRegistry::name(fam); }

  std::string to_string() const {
    std::ostringstream os;
    os << family();
    if (j != 0)
      os << '(' << i << ',' << j << ')';
    else
      os << i;
    if (sgn < 0) os << "^-1";
    return os.str();
  }
};

using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverse());
  return r;
}

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline Word pow(const Word& w, int k) {
  Word r;
  const Word& body = k >= 0 ? w : inverse(w);
  for (int c = std::abs(k); c > 0; --c) r.insert(r.end(), body.begin(), body.end());
  return r;
}

// by * w * by^-1
inline Word conjugate(const Word& w, const Word& by) {
  return concat(concat(by, w), inverse(by));
}

// x y x^-1 y^-1
inline Word commutator(const Word& x, const Word& y) {
  return concat(concat(x, y), concat(inverse(x), inverse(y)));
}

inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().same_base(l) && out.back().sgn == -l.sgn)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline bool freely_trivial(const Word& w) { return free_reduce(w).empty(); }

// Replaces every letter by image(base letter), inverting images for
// negative occurrences. No reduction is performed.
inline Word substitute(const Word& w, const std::function<Word(const Letter&)>& image) {
  Word out;
  for (const Letter& l : w) {
    Word im = image(l.base());
    if (l.sgn < 0) im = inverse(im);
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

// Compact per-letter serialization used as a hash/dedup key.
inline std::string word_key(const Word& w) {
  std::string k;
  k.reserve(w.size() * 4);
  for (const Letter& l : w) {
    k.push_back(static_cast<char>(l.fam + 1));
    k.push_back(static_cast<char>(l.i + 1));
    k.push_back(static_cast<char>(l.j + 1));
    k.push_back(l.sgn > 0 ? '+' : '-');
  }
  return k;
}

// Text form. Adjacent equal letters are printed with an exponent, so
// "h1 h1 h1" renders as "h1^3". The empty word renders as "1".
inline std::string format(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    if (!first) os << ' ';
    first = false;
    const Letter& l = w[i];
    os << l.family();
    if (l.j != 0)
      os << '(' << l.i << ',' << l.j << ')';
    else
      os << l.i;
    long long e = static_cast<long long>(run) * l.sgn;
    if (e != 1) os << '^' << e;
    i += run;
  }
  return os.str();
}

namespace detail {

inline void parse_fail(const std::string& tok, const std::string& why) {
  throw std::invalid_argument("cannot parse letter '" + tok + "': " + why);
}

inline long long parse_int(const std::string& tok, size_t& p, const std::string& what) {
  size_t start = p;
  bool neg = false;
  if (p < tok.size() && tok[p] == '-') {
    neg = true;
    ++p;
  }
  if (p >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[p])))
    parse_fail(tok, "expected " + what);
  long long v = 0;
  while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) {
    v = v * 10 + (tok[p] - '0');
    if (v > 1000000) parse_fail(tok, what + " out of range");
    ++p;
  }
  (void)start;
  return neg ? -v : v;
}

}  // namespace detail

// Grammar: a word is whitespace-separated letters. A letter is a family
// name ([A-Za-z]+), an index part (digits, or "(i,j)" / "(i)"), and an
// optional "^k" exponent which is expanded eagerly. The token "1" denotes
// the empty word.
inline Word parse(const std::string& text) {
  Word out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    size_t p = 0;
    while (p < tok.size() && std::isalpha(static_cast<unsigned char>(tok[p]))) ++p;
    if (p == 0) detail::parse_fail(tok, "expected a family name");
    std::string family = tok.substr(0, p);
    int i = 0, j = 0;
    if (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) {
      i = static_cast<int>(detail::parse_int(tok, p, "an index"));
    } else if (p < tok.size() && tok[p] == '(') {
      ++p;
      i = static_cast<int>(detail::parse_int(tok, p, "an index"));
      if (p < tok.size() && tok[p] == ',') {
        ++p;
        j = static_cast<int>(detail::parse_int(tok, p, "an index"));
      }
      if (p >= tok.size() || tok[p] != ')') detail::parse_fail(tok, "expected ')'");
      ++p;
    } else {
      detail::parse_fail(tok, "expected an index");
    }
    if (i < 0 || j < 0) detail::parse_fail(tok, "indices must be positive");
    long long k = 1;
    if (p < tok.size() && tok[p] == '^') {
      ++p;
      k = detail::parse_int(tok, p, "an exponent");
    }
    if (p != tok.size()) detail::parse_fail(tok, "trailing characters");
    Letter base(family, i, j, 1);
    if (k < 0) base.sgn = -1;
    for (long long c = std::abs(k); c > 0; --c) out.push_back(base);
  }
  return out;
}

// A presentation's letter universe: which families exist and which index
// pairs are legal for the given parameters.
struct Alphabet {
  struct Entry {
    int fam;
    int arity;  // 1 or 2
    std::function<bool(int, int)> ok;
  };
  std::vector<Entry> entries;

  void add(const std::string& family, int arity, std::function<bool(int, int)> ok) {
    entries.push_back({FamilyRegistry::id(family), arity, std::move(ok)});
  }

  bool knows(const Letter& l) const {
    for (const Entry& e : entries) {
      int arity = l.j != 0 ? 2 : 1;
      if (e.fam == l.fam && e.arity == arity && e.ok(l.i, l.j)) return true;
    }
    return false;
  }

  void validate(const Word& w) const {
    for (const Letter& l : w)
      if (!knows(l))
        throw std::invalid_argument("letter '" + l.to_string() +
                                    "' is not a generator of this presentation");
  }
};

}  // namespace orbibraid
