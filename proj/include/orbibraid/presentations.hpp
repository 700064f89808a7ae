#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbibraid/params.hpp"
#include "orbibraid/partial_conj.hpp"
#include "orbibraid/words.hpp"

namespace orbibraid {

struct Presentation {
  std::string label;
  GroupParams params;
  std::vector<Letter> generators;
  std::vector<Word> relators;
  Alphabet alphabet;
  int pcDepth = -1;  // >= 0 only when relator family (R) was depth-truncated

  void add_relator(const Word& w) {
    Word r = free_reduce(w);
    if (r.empty())
      throw std::logic_error("presentation '" + label + "': relator reduced to nothing");
    relators.push_back(std::move(r));
  }
};

// --- generator expansion formulas ---------------------------------------

// a_ji = h_{j-1}^-1 ... h_{i+1}^-1 h_i^2 h_{i+1} ... h_{j-1}
inline Word expand_a(int j, int i, const GroupParams& p) {
  if (!(1 <= i && i < j && j <= p.n)) throw std::out_of_range("expand_a: need 1 <= i < j <= n");
  Word pre;
  for (int q = j - 1; q >= i + 1; --q) pre.push_back(Letter("h", q, -1));
  Word w = pre;
  w.push_back(Letter("h", i));
  w.push_back(Letter("h", i));
  w = concat(w, inverse(pre));
  return w;
}

namespace detail {

inline Word expand_tail(int k, const Letter& core, const GroupParams& p) {
  if (!(1 <= k && k <= p.n)) throw std::out_of_range("generator expansion: need 1 <= k <= n");
  Word pre;
  for (int q = k - 1; q >= 1; --q) pre.push_back(Letter("h", q, -1));
  Word w = pre;
  w.push_back(core);
  w = concat(w, inverse(pre));
  return w;
}

}  // namespace detail

// b_k,lam = h_{k-1}^-1 ... h_1^-1 t_lam h_1 ... h_{k-1}
inline Word expand_b(int k, int lam, const GroupParams& p) {
  if (!(1 <= lam && lam <= p.L)) throw std::out_of_range("expand_b: puncture index");
  return detail::expand_tail(k, Letter("t", lam), p);
}

// c_k,nu = h_{k-1}^-1 ... h_1^-1 u_nu h_1 ... h_{k-1}
inline Word expand_c(int k, int nu, const GroupParams& p) {
  if (!(1 <= nu && nu <= p.N)) throw std::out_of_range("expand_c: cone index");
  return detail::expand_tail(k, Letter("u", nu), p);
}

// Expands a/b/c letters into h/t/u letters; h/t/u letters pass through.
inline Word expand_pure_word(const Word& w, const GroupParams& p) {
  return free_reduce(substitute(w, [&](const Letter& l) -> Word {
    const std::string& f = l.family();
    if (f == "a") return expand_a(l.i, l.j, p);
    if (f == "b") return expand_b(l.i, l.j, p);
    if (f == "c") return expand_c(l.i, l.j, p);
    return {l};
  }));
}

namespace detail {

// Braid-group style alphabets: strand family (h/H), puncture family (t/T),
// cone family (u/U).
inline Alphabet braid_alphabet(const GroupParams& p, const std::string& hs,
                               const std::string& ts, const std::string& us) {
  Alphabet al;
  int n = p.n, L = p.L, N = p.N;
  al.add(hs, 1, [n](int i, int) { return 1 <= i && i < n; });
  al.add(ts, 1, [L](int i, int) { return 1 <= i && i <= L; });
  al.add(us, 1, [N](int i, int) { return 1 <= i && i <= N; });
  return al;
}

inline Alphabet pure_alphabet(const GroupParams& p, int maxStrand, const std::string& as,
                              const std::string& bs, const std::string& cs) {
  Alphabet al;
  int L = p.L, N = p.N;
  al.add(as, 2, [maxStrand](int i, int j) { return 1 <= j && j < i && i <= maxStrand; });
  al.add(bs, 2, [maxStrand, L](int i, int j) {
    return 1 <= i && i <= maxStrand && 1 <= j && j <= L;
  });
  al.add(cs, 2, [maxStrand, N](int i, int j) {
    return 1 <= i && i <= maxStrand && 1 <= j && j <= N;
  });
  return al;
}

inline void braid_generators(Presentation& P, const GroupParams& p, const std::string& hs,
                             const std::string& ts, const std::string& us) {
  for (int j = 1; j < p.n; ++j) P.generators.push_back(Letter(hs, j));
  for (int lam = 1; lam <= p.L; ++lam) P.generators.push_back(Letter(ts, lam));
  for (int nu = 1; nu <= p.N; ++nu) P.generators.push_back(Letter(us, nu));
}

// Relation families (2)-(5) of the h/t/u presentations (everything except
// the finite-order relators).
inline void braid_relators(Presentation& P, const GroupParams& p, const std::string& hs,
                           const std::string& ts, const std::string& us) {
  int n = p.n, L = p.L, N = p.N;
  auto h = [&](int i) { return Word{Letter(hs, i)}; };
  auto t = [&](int i) { return Word{Letter(ts, i)}; };
  auto u = [&](int i) { return Word{Letter(us, i)}; };
  // (2) braid and commutator relations
  for (int i = 1; i <= n - 2; ++i) {
    Word lhs = concat(concat(h(i), h(i + 1)), h(i));
    Word rhs = concat(concat(h(i + 1), h(i)), h(i + 1));
    P.add_relator(concat(lhs, inverse(rhs)));
  }
  for (int j = 1; j < n; ++j)
    for (int k = j + 2; k < n; ++k) P.add_relator(commutator(h(j), h(k)));
  // (3) [t_lam, h_j], [u_nu, h_j] for 2 <= j < n
  for (int lam = 1; lam <= L; ++lam)
    for (int j = 2; j < n; ++j) P.add_relator(commutator(t(lam), h(j)));
  for (int nu = 1; nu <= N; ++nu)
    for (int j = 2; j < n; ++j) P.add_relator(commutator(u(nu), h(j)));
  if (n < 2) return;
  // (4) [h1 t_lam h1, t_lam], [h1 u_nu h1, u_nu]
  for (int lam = 1; lam <= L; ++lam)
    P.add_relator(commutator(concat(concat(h(1), t(lam)), h(1)), t(lam)));
  for (int nu = 1; nu <= N; ++nu)
    P.add_relator(commutator(concat(concat(h(1), u(nu)), h(1)), u(nu)));
  // (5) [t_th, b_2lam] (th < lam), [u_mu, c_2nu] (mu < nu), [t_lam, c_2nu]
  auto sandwich = [&](const Word& core) { return conjugate(core, inverse(h(1))); };
  for (int th = 1; th <= L; ++th)
    for (int lam = th + 1; lam <= L; ++lam)
      P.add_relator(commutator(t(th), sandwich(t(lam))));
  for (int mu = 1; mu <= N; ++mu)
    for (int nu = mu + 1; nu <= N; ++nu)
      P.add_relator(commutator(u(mu), sandwich(u(nu))));
  for (int lam = 1; lam <= L; ++lam)
    for (int nu = 1; nu <= N; ++nu)
      P.add_relator(commutator(t(lam), sandwich(u(nu))));
}

// Relation families of the pure presentations over an a/b/c style alphabet
// with strand indices up to maxStrand. `torsion` adds the finite-order
// family c_{k nu}^{m_nu}. Family (4) includes the mixed sandwich schema
// [a_kj b_k lam a_kj^-1, c_j nu]: it is a defining relator of the pure
// mapping class group and transports along ev, so the pure braid
// presentations need it as well.
inline void pure_relators(Presentation& P, const GroupParams& p, int maxStrand, bool torsion,
                          const std::string& as, const std::string& bs,
                          const std::string& cs) {
  int L = p.L, N = p.N;
  auto a = [&](int j, int i) { return Word{Letter(as, j, i, 1)}; };
  auto b = [&](int k, int lam) { return Word{Letter(bs, k, lam, 1)}; };
  auto c = [&](int k, int nu) { return Word{Letter(cs, k, nu, 1)}; };
  // (1) c_{k nu}^{m_nu}
  if (torsion)
    for (int k = 1; k <= maxStrand; ++k)
      for (int nu = 1; nu <= N; ++nu) P.add_relator(pow(c(k, nu), p.order(nu)));
  // (2) [a_ji, a_lk], [b_j lam, a_lk], [c_j nu, a_lk]
  for (int i = 1; i <= maxStrand; ++i)
    for (int j = i + 1; j <= maxStrand; ++j)
      for (int k = j + 1; k <= maxStrand; ++k)
        for (int l = k + 1; l <= maxStrand; ++l)
          P.add_relator(commutator(a(j, i), a(l, k)));
  for (int j = 1; j <= maxStrand; ++j)
    for (int k = j + 1; k <= maxStrand; ++k)
      for (int l = k + 1; l <= maxStrand; ++l) {
        for (int lam = 1; lam <= L; ++lam) P.add_relator(commutator(b(j, lam), a(l, k)));
        for (int nu = 1; nu <= N; ++nu) P.add_relator(commutator(c(j, nu), a(l, k)));
      }
  // (3) [a_li, a_kj], [b_l lam, a_kj], [b_l lam, b_k th], [c_l nu, a_kj],
  //     [c_l nu, b_k lam], [c_l nu, c_k mu]
  for (int i = 1; i <= maxStrand; ++i)
    for (int j = i + 1; j <= maxStrand; ++j)
      for (int k = j + 1; k <= maxStrand; ++k)
        for (int l = k + 1; l <= maxStrand; ++l)
          P.add_relator(commutator(a(l, i), a(k, j)));
  for (int j = 1; j <= maxStrand; ++j)
    for (int k = j + 1; k <= maxStrand; ++k)
      for (int l = k + 1; l <= maxStrand; ++l) {
        for (int lam = 1; lam <= L; ++lam) P.add_relator(commutator(b(l, lam), a(k, j)));
        for (int nu = 1; nu <= N; ++nu) P.add_relator(commutator(c(l, nu), a(k, j)));
      }
  for (int k = 1; k <= maxStrand; ++k)
    for (int l = k + 1; l <= maxStrand; ++l) {
      for (int th = 1; th <= L; ++th)
        for (int lam = th + 1; lam <= L; ++lam)
          P.add_relator(commutator(b(l, lam), b(k, th)));
      for (int lam = 1; lam <= L; ++lam)
        for (int nu = 1; nu <= N; ++nu) P.add_relator(commutator(c(l, nu), b(k, lam)));
      for (int mu = 1; mu <= N; ++mu)
        for (int nu = mu + 1; nu <= N; ++nu)
          P.add_relator(commutator(c(l, nu), c(k, mu)));
    }
  // (4) sandwich relators
  for (int i = 1; i <= maxStrand; ++i)
    for (int j = i + 1; j <= maxStrand; ++j)
      for (int k = j + 1; k <= maxStrand; ++k)
        for (int l = k + 1; l <= maxStrand; ++l)
          P.add_relator(commutator(
              concat(concat(a(l, k), a(l, j)), inverse(a(l, k))), a(k, i)));
  for (int i = 1; i <= maxStrand; ++i)
    for (int j = i + 1; j <= maxStrand; ++j)
      for (int k = j + 1; k <= maxStrand; ++k) {
        Word core = concat(concat(a(k, j), a(k, i)), inverse(a(k, j)));
        for (int lam = 1; lam <= L; ++lam) P.add_relator(commutator(core, b(j, lam)));
        for (int nu = 1; nu <= N; ++nu) P.add_relator(commutator(core, c(j, nu)));
      }
  for (int j = 1; j <= maxStrand; ++j)
    for (int k = j + 1; k <= maxStrand; ++k) {
      for (int th = 1; th <= L; ++th)
        for (int lam = th + 1; lam <= L; ++lam)
          P.add_relator(commutator(
              concat(concat(a(k, j), b(k, th)), inverse(a(k, j))), b(j, lam)));
      for (int mu = 1; mu <= N; ++mu)
        for (int nu = mu + 1; nu <= N; ++nu)
          P.add_relator(commutator(
              concat(concat(a(k, j), c(k, mu)), inverse(a(k, j))), c(j, nu)));
      for (int lam = 1; lam <= L; ++lam)
        for (int nu = 1; nu <= N; ++nu)
          P.add_relator(commutator(
              concat(concat(a(k, j), b(k, lam)), inverse(a(k, j))), c(j, nu)));
    }
  // (5) triple products, two relators each
  auto triple = [&](const Word& u1, const Word& u2, const Word& u3, const Word& v1,
                    const Word& v2, const Word& v3, const Word& w1, const Word& w2,
                    const Word& w3) {
    Word left = concat(concat(u1, u2), u3);
    Word mid = concat(concat(v1, v2), v3);
    Word right = concat(concat(w1, w2), w3);
    P.add_relator(concat(left, inverse(mid)));
    P.add_relator(concat(mid, inverse(right)));
  };
  for (int i = 1; i <= maxStrand; ++i)
    for (int j = i + 1; j <= maxStrand; ++j) {
      for (int k = j + 1; k <= maxStrand; ++k)
        triple(a(j, i), a(k, j), a(k, i), a(k, i), a(j, i), a(k, j), a(k, j), a(k, i),
               a(j, i));
      for (int lam = 1; lam <= L; ++lam)
        triple(a(j, i), b(j, lam), b(i, lam), b(i, lam), a(j, i), b(j, lam), b(j, lam),
               b(i, lam), a(j, i));
      for (int nu = 1; nu <= N; ++nu)
        triple(a(j, i), c(j, nu), c(i, nu), c(i, nu), a(j, i), c(j, nu), c(j, nu),
               c(i, nu), a(j, i));
    }
}

inline void pure_generators(Presentation& P, const GroupParams& p, int maxStrand,
                            const std::string& as, const std::string& bs,
                            const std::string& cs) {
  for (int j = 2; j <= maxStrand; ++j)
    for (int i = 1; i < j; ++i) P.generators.push_back(Letter(as, j, i, 1));
  for (int k = 1; k <= maxStrand; ++k)
    for (int lam = 1; lam <= p.L; ++lam) P.generators.push_back(Letter(bs, k, lam, 1));
  for (int k = 1; k <= maxStrand; ++k)
    for (int nu = 1; nu <= p.N; ++nu) P.generators.push_back(Letter(cs, k, nu, 1));
}

}  // namespace detail

// Z_n(Sigma_Gamma(L)): generators h/t/u with the finite-order relators.
inline Presentation present_orb_braid(const GroupParams& p) {
  p.validate();
  Presentation P;
  P.label = "orb_braid" + p.to_string();
  P.params = p;
  P.alphabet = detail::braid_alphabet(p, "h", "t", "u");
  detail::braid_generators(P, p, "h", "t", "u");
  for (int nu = 1; nu <= p.N; ++nu)
    P.add_relator(pow(Word{Letter("u", nu)}, p.order(nu)));
  detail::braid_relators(P, p, "h", "t", "u");
  return P;
}

// Z_n(Sigma_Gamma(L,N)), the braid group of the punctured model: identical
// presentation without the finite-order relators.
inline Presentation present_orb_braid_LN(const GroupParams& p) {
  p.validate();
  Presentation P;
  P.label = "orb_braid_LN" + p.to_string();
  P.params = p;
  P.alphabet = detail::braid_alphabet(p, "h", "t", "u");
  detail::braid_generators(P, p, "h", "t", "u");
  detail::braid_relators(P, p, "h", "t", "u");
  return P;
}

// Map^{id,orb}_n(Sigma_Gamma(L)): uppercase alphabet, no finite-order family.
inline Presentation present_map_id_orb(const GroupParams& p) {
  p.validate();
  Presentation P;
  P.label = "map_id_orb" + p.to_string();
  P.params = p;
  P.alphabet = detail::braid_alphabet(p, "H", "T", "U");
  detail::braid_generators(P, p, "H", "T", "U");
  detail::braid_relators(P, p, "H", "T", "U");
  return P;
}

// PZ_n(Sigma_Gamma(L)).
inline Presentation present_pure_orb_braid(const GroupParams& p) {
  p.validate();
  Presentation P;
  P.label = "pure_orb_braid" + p.to_string();
  P.params = p;
  P.alphabet = detail::pure_alphabet(p, p.n, "a", "b", "c");
  detail::pure_generators(P, p, p.n, "a", "b", "c");
  detail::pure_relators(P, p, p.n, true, "a", "b", "c");
  return P;
}

// PMap^{id,orb}_n(Sigma_Gamma(L)): uppercase, no finite-order family.
inline Presentation present_pmap_id_orb(const GroupParams& p) {
  p.validate();
  Presentation P;
  P.label = "pmap_id_orb" + p.to_string();
  P.params = p;
  P.alphabet = detail::pure_alphabet(p, p.n, "A", "B", "C");
  detail::pure_generators(P, p, p.n, "A", "B", "C");
  detail::pure_relators(P, p, p.n, false, "A", "B", "C");
  return P;
}

// pi_1^{orb}(Sigma_Gamma(n-1+L)) = F_{n-1+L} * Gamma over x/y/z letters.
inline Presentation present_free_product_pi1(const GroupParams& p) {
  p.validate();
  Presentation P;
  P.label = "pi1_free_prod" + p.to_string();
  P.params = p;
  int n = p.n, L = p.L, N = p.N;
  P.alphabet.add("x", 1, [n](int i, int) { return 1 <= i && i < n; });
  P.alphabet.add("y", 1, [L](int i, int) { return 1 <= i && i <= L; });
  P.alphabet.add("z", 1, [N](int i, int) { return 1 <= i && i <= N; });
  for (int j = 1; j < n; ++j) P.generators.push_back(Letter("x", j));
  for (int lam = 1; lam <= L; ++lam) P.generators.push_back(Letter("y", lam));
  for (int nu = 1; nu <= N; ++nu) P.generators.push_back(Letter("z", nu));
  for (int nu = 1; nu <= N; ++nu)
    P.add_relator(pow(Word{Letter("z", nu)}, p.order(nu)));
  return P;
}

// PZ_n as <X|R> \rtimes PZ_{n-1}: pure generators with strand indices < n
// plus the point-pushing letters x/y/z. The infinite family (R) is
// truncated at pcDepth.
inline Presentation present_semidirect_pure(const GroupParams& p, int pcDepth) {
  p.validate();
  if (p.n < 2) throw std::invalid_argument("present_semidirect_pure: need n >= 2");
  if (pcDepth < 0) throw std::invalid_argument("present_semidirect_pure: pcDepth >= 0");
  Presentation P;
  std::ostringstream lab;
  lab << "semidirect_pure" << p.to_string() << "[pcDepth=" << pcDepth << "]";
  P.label = lab.str();
  P.params = p;
  P.pcDepth = pcDepth;
  int n = p.n, L = p.L, N = p.N;
  P.alphabet = detail::pure_alphabet(p, n - 1, "a", "b", "c");
  P.alphabet.add("x", 1, [n](int i, int) { return 1 <= i && i < n; });
  P.alphabet.add("y", 1, [L](int i, int) { return 1 <= i && i <= L; });
  P.alphabet.add("z", 1, [N](int i, int) { return 1 <= i && i <= N; });
  detail::pure_generators(P, p, n - 1, "a", "b", "c");
  for (int j = 1; j < n; ++j) P.generators.push_back(Letter("x", j));
  for (int lam = 1; lam <= L; ++lam) P.generators.push_back(Letter("y", lam));
  for (int nu = 1; nu <= N; ++nu) P.generators.push_back(Letter("z", nu));
  // (R)
  for (int nu = 1; nu <= N; ++nu)
    P.add_relator(pow(Word{Letter("z", nu)}, p.order(nu)));
  for (const Word& w : kernel_K(p, pcDepth).elements) P.add_relator(w);
  // (S1)-(S5)
  detail::pure_relators(P, p, n - 1, true, "a", "b", "c");
  // (C): both conjugation directions for every tag and every letter
  std::vector<Letter> letters;
  for (int j = 1; j < n; ++j) letters.push_back(Letter("x", j));
  for (int lam = 1; lam <= L; ++lam) letters.push_back(Letter("y", lam));
  for (int nu = 1; nu <= N; ++nu) letters.push_back(Letter("z", nu));
  for (const PartialConjugationTag& t : partial_conjugation_tags(p)) {
    Word tag{t.as_letter()};
    for (const Letter& g : letters) {
      Word G{g};
      P.add_relator(concat(conjugate(G, tag), inverse(pc_apply_letter(t, g, 1))));
      P.add_relator(concat(conjugate(G, inverse(tag)), inverse(pc_apply_letter(t, g, -1))));
    }
  }
  return P;
}

// Z_{n+L}^{fix(L)}(Sigma_Gamma): the orbifold braid presentation plus the
// fixed-strand relations (t_lam u_nu)^{m_nu} = (u_nu t_lam)^{m_nu}.
inline Presentation present_fixed_strand(const GroupParams& p) {
  Presentation P = present_orb_braid(p);
  P.label = "fixed_strand" + p.to_string();
  for (int lam = 1; lam <= p.L; ++lam)
    for (int nu = 1; nu <= p.N; ++nu) {
      Word tu{Letter("t", lam), Letter("u", nu)};
      Word ut{Letter("u", nu), Letter("t", lam)};
      int m = p.order(nu);
      P.add_relator(concat(pow(tu, m), pow(ut, -m)));
    }
  return P;
}

}  // namespace orbibraid
