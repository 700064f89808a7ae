#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbibraid/params.hpp"
#include "orbibraid/words.hpp"

namespace orbibraid {

// Automorphism of the free group on g_1..g_rank, stored by generator images.
struct FreeAutomorphism {
  int rank = 0;
  std::vector<Word> images;  // images[i] is the image of g_{i+1}, freely reduced

  static FreeAutomorphism identity(int rank) {
    FreeAutomorphism a;
    a.rank = rank;
    a.images.reserve(static_cast<size_t>(rank));
    for (int i = 1; i <= rank; ++i) a.images.push_back({Letter("g", i)});
    return a;
  }

  bool is_identity() const {
    for (int i = 1; i <= rank; ++i)
      if (images[static_cast<size_t>(i) - 1] != Word{Letter("g", i)}) return false;
    return true;
  }

  Word apply(const Word& w) const {
    return free_reduce(substitute(w, [&](const Letter& l) -> Word {
      if (l.family() != "g" || l.i < 1 || l.i > rank)
        throw std::invalid_argument("automorphism applied to foreign letter " + l.to_string());
      return images[static_cast<size_t>(l.i) - 1];
    }));
  }

  bool operator==(const FreeAutomorphism& o) const {
    return rank == o.rank && images == o.images;
  }
  bool operator!=(const FreeAutomorphism& o) const { return !(*this == o); }

  std::string to_string() const {
    std::ostringstream os;
    for (int i = 1; i <= rank; ++i) {
      if (i > 1) os << "; ";
      os << "g" << i << " -> " << format(images[static_cast<size_t>(i) - 1]);
    }
    return os.str();
  }
};

// compose(a, b) acts as "b first, then a".
inline FreeAutomorphism compose(const FreeAutomorphism& after, const FreeAutomorphism& first) {
  if (after.rank != first.rank) throw std::invalid_argument("compose: rank mismatch");
  FreeAutomorphism r;
  r.rank = after.rank;
  for (const Word& im : first.images) r.images.push_back(after.apply(im));
  return r;
}

// Strand order of the ambient braid group: cone_N..cone_1, then
// puncture_L..puncture_1, then marked_1..marked_n.
struct StrandLayout {
  int n = 0, L = 0, N = 0;

  explicit StrandLayout(const GroupParams& p) : n(p.n), L(p.L), N(p.N) {}
  int total() const { return N + L + n; }
  int positionOfCone(int nu) const {
    if (nu < 1 || nu > N) throw std::out_of_range("cone index");
    return N - nu + 1;
  }
  int positionOfPuncture(int lam) const {
    if (lam < 1 || lam > L) throw std::out_of_range("puncture index");
    return N + L - lam + 1;
  }
  int positionOfMarked(int j) const {
    if (j < 1 || j > n) throw std::out_of_range("marked point index");
    return N + L + j;
  }
};

// Artin action of a word in s_1..s_{total-1} on the free group g_1..g_total.
// The word acts left to right: action(vw) = action(v) then action(w) applied
// to its output, i.e. action(vw) = action(v) o action(w) in compose() order
// with the leftmost letter outermost.
inline FreeAutomorphism artin_action(const Word& braidWord, int total) {
  FreeAutomorphism a = FreeAutomorphism::identity(total);
  for (const Letter& l : braidWord) {
    if (l.family() != "s")
      throw std::invalid_argument("artin_action: expected s_i letters, got " + l.to_string());
    int i = l.i;
    if (i < 1 || i >= total) throw std::out_of_range("artin_action: strand index " + l.to_string());
    Word& gi = a.images[static_cast<size_t>(i) - 1];
    Word& gi1 = a.images[static_cast<size_t>(i)];
    if (l.sgn > 0) {
      Word ni = free_reduce(concat(concat(gi, gi1), inverse(gi)));
      gi1 = gi;
      gi = std::move(ni);
    } else {
      Word ni1 = free_reduce(concat(concat(inverse(gi1), gi), gi1));
      gi = gi1;
      gi1 = std::move(ni1);
    }
  }
  return a;
}

namespace detail {

// Band generator linking positions p < q:
// s_{q-1}^-1 .. s_{p+1}^-1 s_p^2 s_{p+1} .. s_{q-1}
// The handed-ness (inverse prefix, positive core) is the unique choice under
// which every relator of the mapping class presentations acts trivially.
inline Word band_generator(int p, int q) {
  Word pre;
  for (int r = q - 1; r >= p + 1; --r) pre.push_back(Letter("s", r, -1));
  Word w = pre;
  w.push_back(Letter("s", p));
  w.push_back(Letter("s", p));
  return concat(w, inverse(pre));
}

}  // namespace detail

// Image of one h/t/u generator in the ambient braid group.
inline Word embed_generator(const Letter& gen, const GroupParams& p) {
  StrandLayout lay(p);
  const std::string& f = gen.base().family();
  Word im;
  if (f == "h") {
    if (gen.i < 1 || gen.i >= p.n) throw std::out_of_range("embed_generator: h index");
    im = {Letter("s", lay.positionOfMarked(gen.i))};
  } else if (f == "t") {
    im = detail::band_generator(lay.positionOfPuncture(gen.i), lay.positionOfMarked(1));
  } else if (f == "u") {
    im = detail::band_generator(lay.positionOfCone(gen.i), lay.positionOfMarked(1));
  } else {
    throw std::invalid_argument("embed_generator: letter " + gen.to_string() +
                                " is not an h/t/u generator");
  }
  return gen.sgn > 0 ? im : inverse(im);
}

inline Word embed_word(const Word& w, const GroupParams& p) {
  return free_reduce(
      substitute(w, [&](const Letter& base) { return embed_generator(base, p); }));
}

// Decides triviality in Z_n(Sigma_Gamma(L,N)) through the faithful Artin
// action of the ambient braid group.
inline bool is_trivial_ZLN(const Word& w, const GroupParams& p) {
  p.validate();
  return artin_action(embed_word(w, p), StrandLayout(p).total()).is_identity();
}

inline FreeAutomorphism artin_automorphism(const Word& w, const GroupParams& p) {
  return artin_action(embed_word(w, p), StrandLayout(p).total());
}

}  // namespace orbibraid
