#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbibraid/freeprod.hpp"
#include "orbibraid/params.hpp"
#include "orbibraid/words.hpp"

namespace orbibraid {

// A partial conjugation is indexed by a pure generator of the subgroup that
// fixes the n-th strand: a(k,i) with i < k < n, b(k,iota) or c(k,nu) with
// k < n. It acts on words over the x/y/z alphabet.
struct PartialConjugationTag {
  char kind;   // 'a', 'b' or 'c'
  int k;       // strand index, k < n
  int second;  // i (< k) for 'a', iota for 'b', nu for 'c'

  std::string to_string() const {
    return std::string(1, kind) + "(" + std::to_string(k) + "," +
           std::to_string(second) + ")";
  }
  Letter as_letter() const { return Letter(std::string(1, kind), k, second, 1); }
  bool operator==(const PartialConjugationTag& o) const {
    return kind == o.kind && k == o.k && second == o.second;
  }
};

inline std::vector<PartialConjugationTag> partial_conjugation_tags(const GroupParams& p) {
  p.validate();
  std::vector<PartialConjugationTag> tags;
  for (int k = 2; k < p.n; ++k)
    for (int i = 1; i < k; ++i) tags.push_back({'a', k, i});
  for (int k = 1; k < p.n; ++k)
    for (int io = 1; io <= p.L; ++io) tags.push_back({'b', k, io});
  for (int k = 1; k < p.n; ++k)
    for (int nu = 1; nu <= p.N; ++nu) tags.push_back({'c', k, nu});
  return tags;
}

namespace detail {

enum class PcRow { Fixed, P1, P2, P3 };

// Classifies the action of a tag on a single positive x/y/z letter and
// reports the partner letter p and the twist letter s = x_k of the tag.
inline PcRow pc_row(const PartialConjugationTag& t, const Letter& g, Letter& p) {
  const std::string& fam = g.family();
  if (t.kind == 'a') {
    p = Letter("x", t.second);
    if (fam != "x") return PcRow::Fixed;
    if (g.i > t.k || g.i < t.second) return PcRow::Fixed;
    if (g.i == t.k) return PcRow::P1;
    if (g.i == t.second) return PcRow::P2;
    return PcRow::P3;
  }
  if (t.kind == 'b') {
    p = Letter("y", t.second);
    if (fam == "x") {
      if (g.i > t.k) return PcRow::Fixed;
      if (g.i == t.k) return PcRow::P1;
      return PcRow::P3;
    }
    if (fam == "y") {
      if (g.i > t.second) return PcRow::Fixed;
      if (g.i == t.second) return PcRow::P2;
      return PcRow::P3;
    }
    return PcRow::Fixed;  // z letters
  }
  // c tag
  p = Letter("z", t.second);
  if (fam == "x") {
    if (g.i > t.k) return PcRow::Fixed;
    if (g.i == t.k) return PcRow::P1;
    return PcRow::P3;
  }
  if (fam == "y") return PcRow::P3;
  // z letters
  if (g.i > t.second) return PcRow::Fixed;
  if (g.i == t.second) return PcRow::P2;
  return PcRow::P3;
}

}  // namespace detail

// Image of a single positive generator letter under pc_tag (dir = +1) or
// pc_{tag^-1} (dir = -1), per Table 1.
inline Word pc_apply_letter(const PartialConjugationTag& t, const Letter& g, int dir = 1) {
  if (g.sgn != 1) throw std::invalid_argument("pc_apply_letter expects a positive letter");
  const std::string& fam = g.family();
  if (fam != "x" && fam != "y" && fam != "z")
    throw std::invalid_argument("letter '" + g.to_string() + "' is not an x/y/z generator");
  Letter p;
  detail::PcRow row = detail::pc_row(t, g, p);
  Letter s = Letter("x", t.k);
  Word G{g}, P{p}, S{s};
  switch (row) {
    case detail::PcRow::Fixed:
      return G;
    case detail::PcRow::P1:
      // p^-1 g p  /  g p g p^-1 g^-1
      if (dir > 0) return concat(concat(inverse(P), G), P);
      return concat(concat(concat(concat(G, P), G), inverse(P)), inverse(G));
    case detail::PcRow::P2:
      // g^-1 s^-1 g s g  /  s g s^-1
      if (dir > 0)
        return concat(concat(concat(concat(inverse(G), inverse(S)), G), S), G);
      return concat(concat(S, G), inverse(S));
    case detail::PcRow::P3: {
      // C g C^-1 with C = p^-1 s^-1 p s  /  D g D^-1 with D = s p s^-1 p^-1
      Word C = dir > 0 ? concat(concat(inverse(P), inverse(S)), concat(P, S))
                       : concat(concat(S, P), concat(inverse(S), inverse(P)));
      return concat(concat(C, G), inverse(C));
    }
  }
  return G;
}

// Letterwise extension to words, freely reduced. dir = -1 applies the
// inverse partial conjugation.
inline Word pc_apply(const PartialConjugationTag& t, const Word& w, int dir = 1) {
  Word out = substitute(w, [&](const Letter& base) { return pc_apply_letter(t, base, dir); });
  return free_reduce(out);
}

struct KernelFamily {
  GroupParams params;
  std::vector<Word> seeds;
  int depth = 0;
  std::vector<Word> elements;    // seeds closed under partial conjugations
  std::vector<Word> degenerate;  // elements that evaluate to the identity (expected empty)
};

// All words reachable from the seeds by at most `depth` partial conjugations
// (both directions), deduplicated by the free-product normal form of the
// word itself, i.e. by exact element identity in F_{n-1+L} * Gamma.
inline KernelFamily pc_closure(const std::vector<Word>& seeds, const GroupParams& p, int depth) {
  if (depth < 0) throw std::invalid_argument("pc_closure: depth must be >= 0");
  FreeProductEvaluator eval(p);
  std::vector<PartialConjugationTag> tags = partial_conjugation_tags(p);
  KernelFamily fam{p, {}, depth, {}, {}};
  std::map<std::string, Word> seen;
  std::vector<Word> frontier;
  for (const Word& s : seeds) {
    Word r = free_reduce(s);
    fam.seeds.push_back(r);
    std::string key = eval.eval(r).to_string();
    if (seen.emplace(key, r).second) frontier.push_back(r);
  }
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const PartialConjugationTag& t : tags) {
        for (int dir : {1, -1}) {
          Word im = pc_apply(t, w, dir);
          std::string key = eval.eval(im).to_string();
          if (seen.emplace(key, im).second) next.push_back(im);
        }
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [key, w] : seen) {
    if (key == "1")
      fam.degenerate.push_back(w);
    else
      fam.elements.push_back(w);
  }
  return fam;
}

// Seed (g z_nu)^{m_nu} (g^-1 z_nu^-1)^{m_nu} for a free letter g.
inline Word kernel_seed(const Letter& g, int nu, int m) {
  Word gz{g, Letter("z", nu)};
  Word gz_bar{g.inverse(), Letter("z", nu, -1)};
  return concat(pow(gz, m), pow(gz_bar, m));
}

// Kernel K_n: PC-closure of the seeds (x_j z_nu)^{m_nu}(x_j^-1 z_nu^-1)^{m_nu}.
inline KernelFamily kernel_K(const GroupParams& p, int depth) {
  p.validate();
  std::vector<Word> seeds;
  for (int j = 1; j < p.n; ++j)
    for (int nu = 1; nu <= p.N; ++nu)
      seeds.push_back(kernel_seed(Letter("x", j), nu, p.order(nu)));
  return pc_closure(seeds, p, depth);
}

// Kernel K_{n+L}: additionally closes the puncture seeds
// (y_lam z_nu)^{m_nu}(y_lam^-1 z_nu^-1)^{m_nu}.
inline KernelFamily kernel_K_fixed(const GroupParams& p, int depth) {
  p.validate();
  std::vector<Word> seeds;
  for (int j = 1; j < p.n; ++j)
    for (int nu = 1; nu <= p.N; ++nu)
      seeds.push_back(kernel_seed(Letter("x", j), nu, p.order(nu)));
  for (int lam = 1; lam <= p.L; ++lam)
    for (int nu = 1; nu <= p.N; ++nu)
      seeds.push_back(kernel_seed(Letter("y", lam), nu, p.order(nu)));
  return pc_closure(seeds, p, depth);
}

}  // namespace orbibraid
