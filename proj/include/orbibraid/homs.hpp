#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orbibraid/artin.hpp"
#include "orbibraid/freeprod.hpp"
#include "orbibraid/presentations.hpp"
#include "orbibraid/prover.hpp"

namespace orbibraid {

enum class Verdict { Proven, Unknown, Refuted };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Proven: return "Proven";
    case Verdict::Unknown: return "Unknown";
    case Verdict::Refuted: return "Refuted";
  }
  return "?";
}

// --- fast invariant images -------------------------------------------------

// Permutation of marked points induced by an h/t/u or a/b/c word. Returns
// the image of each strand, 1-based.
inline std::vector<int> perm_image(const Word& w, const GroupParams& p) {
  Word base = expand_pure_word(w, p);
  std::vector<int> perm(static_cast<size_t>(p.n));
  std::iota(perm.begin(), perm.end(), 1);
  for (const Letter& l : base) {
    const std::string& f = l.family();
    if (f == "h" || f == "H") {
      if (l.i < 1 || l.i >= p.n) throw std::out_of_range("perm_image: strand index");
      std::swap(perm[static_cast<size_t>(l.i) - 1], perm[static_cast<size_t>(l.i)]);
    }
  }
  return perm;
}

// Exponent vector in Z (shared h coordinate) + Z^L (t) + sum Z_{m_nu} (u);
// a/b/c letters are expanded first.
struct AbelImage {
  long long h = 0;
  std::vector<long long> t;
  std::vector<int> u;

  bool operator==(const AbelImage& o) const { return h == o.h && t == o.t && u == o.u; }
  bool is_zero() const {
    if (h != 0) return false;
    for (long long e : t)
      if (e != 0) return false;
    for (int e : u)
      if (e != 0) return false;
    return true;
  }
  std::string to_string() const {
    std::ostringstream os;
    os << "h:" << h;
    for (size_t i = 0; i < t.size(); ++i) os << " t" << i + 1 << ":" << t[i];
    for (size_t i = 0; i < u.size(); ++i) os << " u" << i + 1 << ":" << u[i];
    return os.str();
  }
};

inline AbelImage abel_image(const Word& w, const GroupParams& p) {
  Word base = expand_pure_word(w, p);
  AbelImage im;
  im.t.assign(static_cast<size_t>(p.L), 0);
  im.u.assign(static_cast<size_t>(p.N), 0);
  for (const Letter& l : base) {
    std::string f = l.family();
    if (f.size() == 1 && f[0] >= 'A' && f[0] <= 'Z') f[0] = static_cast<char>(f[0] - 'A' + 'a');
    if (f == "h") im.h += l.sgn;
    else if (f == "t") im.t.at(static_cast<size_t>(l.i) - 1) += l.sgn;
    else if (f == "u") {
      int m = p.order(l.i);
      int& e = im.u.at(static_cast<size_t>(l.i) - 1);
      e = ((e + l.sgn) % m + m) % m;
    } else {
      throw std::invalid_argument("abel_image: unexpected letter " + l.to_string());
    }
  }
  return im;
}

// --- disproof oracle builders ----------------------------------------------

inline EqualityOracle oracle_perm(const GroupParams& p) {
  return {"perm", [p](const Word& w) {
            std::vector<int> v = perm_image(w, p);
            std::ostringstream os;
            for (int q : v) os << q << ' ';
            return os.str();
          }};
}

inline EqualityOracle oracle_abel(const GroupParams& p) {
  return {"abel", [p](const Word& w) { return abel_image(w, p).to_string(); }};
}

// Sound only where u_nu^{m_nu} = 1 is not imposed (the punctured model).
inline EqualityOracle oracle_artin(const GroupParams& p) {
  return {"artin", [p](const Word& w) { return artin_automorphism(w, p).to_string(); }};
}

inline EqualityOracle oracle_freeprod(const GroupParams& p) {
  return {"freeprod", [p](const Word& w) {
            FreeProductEvaluator ev(p);
            return ev.eval(w).to_string();
          }};
}

// --- homomorphisms ----------------------------------------------------------

// A generator assignment from a presented source into a target with an
// equality decision procedure. `assign` maps positive source letters to
// target words; `equal` decides equality of target words, returning
// Refuted only on a sound disproof.
struct Homomorphism {
  std::string label;
  Presentation source;
  std::string targetKind;  // prover | artin | freeprod | perm | abel
  std::function<Word(const Letter&)> assign;
  std::function<Verdict(const Word&, const Word&, const SearchBudget&)> equal;

  Word apply(const Word& w) const { return free_reduce(substitute(w, assign)); }
  Verdict decide(const Word& w1, const Word& w2, const SearchBudget& budget = {}) const {
    return equal(w1, w2, budget);
  }
};

struct RelatorVerdict {
  Word relator;
  Word image;
  Verdict verdict = Verdict::Unknown;
  std::string detail;
};

struct VonDyckReport {
  std::string hom;
  std::vector<RelatorVerdict> items;

  bool all_proven() const {
    for (const RelatorVerdict& r : items)
      if (r.verdict != Verdict::Proven) return false;
    return true;
  }
  size_t count(Verdict v) const {
    size_t c = 0;
    for (const RelatorVerdict& r : items)
      if (r.verdict == v) ++c;
    return c;
  }
};

inline VonDyckReport von_dyck_check(const Homomorphism& h, const SearchBudget& budget = {}) {
  VonDyckReport rep;
  rep.hom = h.label;
  for (const Word& r : h.source.relators) {
    RelatorVerdict rv;
    rv.relator = r;
    rv.image = h.apply(r);
    rv.verdict = h.equal(rv.image, {}, budget);
    rep.items.push_back(std::move(rv));
  }
  return rep;
}

namespace detail {

// Equality in a presented target group: prover for Proven, the supplied
// oracles for Refuted, otherwise Unknown.
inline std::function<Verdict(const Word&, const Word&, const SearchBudget&)> prover_equal(
    const Presentation& target, std::vector<EqualityOracle> oracles) {
  return [target, oracles = std::move(oracles)](const Word& w1, const Word& w2,
                                                const SearchBudget& budget) {
    if (prove_equal(target, w1, w2, budget).ok()) return Verdict::Proven;
    if (disprove_equal(w1, w2, oracles)) return Verdict::Refuted;
    return Verdict::Unknown;
  };
}

inline Word fold_case(const Letter& l) {
  std::string f = l.family();
  f[0] = static_cast<char>(f[0] - 'A' + 'a');
  return {Letter(f, l.i, l.j, 1)};
}

}  // namespace detail

// ev: Map^{id,orb} -> Z_n(Sigma_Gamma(L)), H/T/U to their lowercase twins.
inline Homomorphism hom_ev(const GroupParams& p) {
  Homomorphism h;
  h.label = "ev" + p.to_string();
  h.source = present_map_id_orb(p);
  h.targetKind = "prover";
  h.assign = detail::fold_case;
  h.equal = detail::prover_equal(present_orb_braid(p), {oracle_perm(p), oracle_abel(p)});
  return h;
}

// ev*: Map^{id,orb} -> Z_n(Sigma_Gamma(L,N)), decided by the Artin action.
inline Homomorphism hom_ev_star(const GroupParams& p) {
  Homomorphism h;
  h.label = "ev*" + p.to_string();
  h.source = present_map_id_orb(p);
  h.targetKind = "artin";
  h.assign = detail::fold_case;
  h.equal = [p](const Word& w1, const Word& w2, const SearchBudget&) {
    return is_trivial_ZLN(free_reduce(concat(w1, inverse(w2))), p) ? Verdict::Proven
                                                                   : Verdict::Refuted;
  };
  return h;
}

// f: Z_n(Sigma_Gamma(L,N)) -> Z_n(Sigma_Gamma(L)), identity on letters.
inline Homomorphism hom_f(const GroupParams& p) {
  Homomorphism h;
  h.label = "f" + p.to_string();
  h.source = present_orb_braid_LN(p);
  h.targetKind = "prover";
  h.assign = [](const Letter& l) -> Word { return {l}; };
  h.equal = detail::prover_equal(present_orb_braid(p), {oracle_perm(p), oracle_abel(p)});
  return h;
}

// iota: pi_1^{orb} -> PZ_n, the point pushing map x_j -> a(n,j),
// y_lam -> b(n,lam), z_nu -> c(n,nu).
inline Homomorphism hom_iota(const GroupParams& p) {
  Homomorphism h;
  h.label = "iota" + p.to_string();
  h.source = present_free_product_pi1(p);
  h.targetKind = "prover";
  int n = p.n;
  h.assign = [n](const Letter& l) -> Word {
    const std::string& f = l.family();
    if (f == "x") return {Letter("a", n, l.i, 1)};
    if (f == "y") return {Letter("b", n, l.i, 1)};
    if (f == "z") return {Letter("c", n, l.i, 1)};
    throw std::invalid_argument("iota: unexpected letter " + l.to_string());
  };
  h.equal =
      detail::prover_equal(present_pure_orb_braid(p), {oracle_perm(p), oracle_abel(p)});
  return h;
}

// pi: PZ_n -> PZ_{n-1}, forgetting the n-th strand.
inline Homomorphism hom_pi(const GroupParams& p) {
  if (p.n < 2) throw std::invalid_argument("hom_pi: need n >= 2");
  GroupParams q{p.n - 1, p.L, p.N, p.m};
  Homomorphism h;
  h.label = "pi" + p.to_string();
  h.source = present_pure_orb_braid(p);
  h.targetKind = "prover";
  int n = p.n;
  h.assign = [n](const Letter& l) -> Word {
    if (l.i == n) return {};
    return {l};
  };
  h.equal =
      detail::prover_equal(present_pure_orb_braid(q), {oracle_perm(q), oracle_abel(q)});
  return h;
}

// s: PZ_{n-1} -> PZ_n, sending generators to their homonyms.
inline Homomorphism hom_s(const GroupParams& p) {
  if (p.n < 2) throw std::invalid_argument("hom_s: need n >= 2");
  GroupParams q{p.n - 1, p.L, p.N, p.m};
  Homomorphism h;
  h.label = "s" + p.to_string();
  h.source = present_pure_orb_braid(q);
  h.targetKind = "prover";
  h.assign = [](const Letter& l) -> Word { return {l}; };
  h.equal =
      detail::prover_equal(present_pure_orb_braid(p), {oracle_perm(p), oracle_abel(p)});
  return h;
}

// omega: Z_n(Sigma_Gamma(L)) -> Z_{n+L}^{fix(L)}(Sigma_Gamma), identity on
// letters into the fixed-strand quotient presentation.
inline Homomorphism hom_omega(const GroupParams& p) {
  Homomorphism h;
  h.label = "omega" + p.to_string();
  h.source = present_orb_braid(p);
  h.targetKind = "prover";
  h.assign = [](const Letter& l) -> Word { return {l}; };
  h.equal =
      detail::prover_equal(present_fixed_strand(p), {oracle_perm(p), oracle_abel(p)});
  return h;
}

// q_{theta,o}: pi_1^{orb} -> Z * Z_{m_o}, keeping y_theta and z_o only.
inline Homomorphism hom_q(const GroupParams& p, int theta, int o) {
  p.validate();
  if (theta < 1 || theta > p.L) throw std::invalid_argument("hom_q: puncture index");
  if (o < 1 || o > p.N) throw std::invalid_argument("hom_q: cone index");
  GroupParams target{1, 1, 1, {p.order(o)}};
  Homomorphism h;
  std::ostringstream lab;
  lab << "q[" << theta << "," << o << "]" << p.to_string();
  h.label = lab.str();
  h.source = present_free_product_pi1(p);
  h.targetKind = "freeprod";
  h.assign = [theta, o](const Letter& l) -> Word {
    const std::string& f = l.family();
    if (f == "y" && l.i == theta) return {Letter("y", 1)};
    if (f == "z" && l.i == o) return {Letter("z", 1)};
    if (f == "x" || f == "y" || f == "z") return {};
    throw std::invalid_argument("q: unexpected letter " + l.to_string());
  };
  h.equal = [target](const Word& w1, const Word& w2, const SearchBudget&) {
    FreeProductEvaluator ev(target);
    return ev.eval(w1) == ev.eval(w2) ? Verdict::Proven : Verdict::Refuted;
  };
  return h;
}

// perm: Z_n(Sigma_Gamma(L)) -> Sym_n.
inline Homomorphism hom_perm(const GroupParams& p) {
  Homomorphism h;
  h.label = "perm" + p.to_string();
  h.source = present_orb_braid(p);
  h.targetKind = "perm";
  h.assign = [](const Letter& l) -> Word { return {l}; };
  h.equal = [p](const Word& w1, const Word& w2, const SearchBudget&) {
    return perm_image(w1, p) == perm_image(w2, p) ? Verdict::Proven : Verdict::Refuted;
  };
  return h;
}

// abel: Z_n(Sigma_Gamma(L)) -> Z + Z^L + sum Z_{m_nu}.
inline Homomorphism hom_abel(const GroupParams& p) {
  Homomorphism h;
  h.label = "abel" + p.to_string();
  h.source = present_orb_braid(p);
  h.targetKind = "abel";
  h.assign = [](const Letter& l) -> Word { return {l}; };
  h.equal = [p](const Word& w1, const Word& w2, const SearchBudget&) {
    return abel_image(w1, p) == abel_image(w2, p) ? Verdict::Proven : Verdict::Refuted;
  };
  return h;
}

}  // namespace orbibraid
