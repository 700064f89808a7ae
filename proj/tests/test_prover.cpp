#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "orbibraid/presentations.hpp"
#include "orbibraid/prover.hpp"

using namespace orbibraid;

namespace {

// Strand permutation of an h/t/u word: h_j swaps j and j+1, t/u act trivially.
EqualityOracle perm_oracle(int n) {
  return {"perm", [n](const Word& w) {
            std::vector<int> perm(static_cast<size_t>(n));
            std::iota(perm.begin(), perm.end(), 1);
            for (const Letter& l : w)
              if (l.family() == "h") std::swap(perm[l.i - 1], perm[l.i]);
            std::ostringstream os;
            for (int v : perm) os << v << ' ';
            return os.str();
          }};
}

// Abelianization of the h/t/u presentation: one shared h exponent, one free
// exponent per t, one exponent mod m per u.
EqualityOracle abel_oracle(const GroupParams& p) {
  return {"abel", [p](const Word& w) {
            long long h = 0;
            std::map<int, long long> t, u;
            for (const Letter& l : w) {
              if (l.family() == "h") h += l.sgn;
              if (l.family() == "t") t[l.i] += l.sgn;
              if (l.family() == "u") {
                int m = p.order(l.i);
                u[l.i] = ((u[l.i] + l.sgn) % m + m) % m;
              }
            }
            std::ostringstream os;
            os << "h:" << h;
            for (auto& [i, e] : t)
              if (e != 0) os << " t" << i << ":" << e;
            for (auto& [i, e] : u)
              if (e != 0) os << " u" << i << ":" << e;
            return os.str();
          }};
}

}  // namespace

TEST_CASE("braid relator closes at depth one") {
  Presentation P = present_orb_braid({3, 0, 0, {}});
  ProveResult r = prove_equal(P, parse("h1 h2 h1"), parse("h2 h1 h2"));
  REQUIRE(r.ok());
  CHECK(r.trace.steps.size() == 1);
  CHECK(format(verify_trace(P, parse("h1 h2 h1"), r.trace)) == "h2 h1 h2");
}

TEST_CASE("torsion kills the expanded c square") {
  Presentation P = present_orb_braid({2, 0, 1, {2}});
  Word w = parse("h1^-1 u1 h1 h1^-1 u1 h1");
  ProveResult r = prove_equal(P, w, {});
  REQUIRE(r.ok());
  CHECK(verify_trace(P, w, r.trace).empty());
  CHECK(expand_pure_word(parse("c(2,1)^2"), {2, 0, 1, {2}}) == free_reduce(w));
}

TEST_CASE("the braided torsion identity in the pure group") {
  Presentation P = present_pure_orb_braid({2, 0, 1, {2}});
  Word lhs = pow(parse("a(2,1) c(2,1)"), 2);
  Word rhs = pow(parse("c(2,1) a(2,1)"), 2);
  ProveResult r = prove_equal(P, lhs, rhs);
  REQUIRE(r.ok());
  CHECK(r.statesExplored < 1000000);
  CHECK(word_key(verify_trace(P, lhs, r.trace)) == word_key(free_reduce(rhs)));
}

TEST_CASE("trace replay") {
  Presentation P = present_orb_braid({2, 0, 1, {2}});
  SECTION("empty trace reduces the input") {
    CHECK(format(verify_trace(P, parse("h1 u1 u1^-1"), {})) == "h1");
  }
  SECTION("single insertion at the front") {
    ProofTrace t{{{0, 0, 0, 1}}};
    CHECK(format(verify_trace(P, parse("h1"), t)) == "u1^2 h1");
  }
  SECTION("insertion position is checked") {
    ProofTrace t{{{9, 0, 0, 1}}};
    CHECK_THROWS_AS(verify_trace(P, parse("h1"), t), std::invalid_argument);
  }
  SECTION("relator index is checked") {
    ProofTrace t{{{0, 42, 0, 1}}};
    CHECK_THROWS_AS(verify_trace(P, parse("h1"), t), std::invalid_argument);
  }
  SECTION("rotation is checked") {
    ProofTrace t{{{0, 0, 7, 1}}};
    CHECK_THROWS_AS(verify_trace(P, parse("h1"), t), std::invalid_argument);
  }
}

TEST_CASE("identical words need no steps") {
  Presentation P = present_orb_braid({3, 1, 1, {3}});
  ProveResult r = prove_equal(P, parse("t1 t1^-1 h1"), parse("h1"));
  REQUIRE(r.ok());
  CHECK(r.trace.steps.empty());
}

TEST_CASE("budget exhaustion reports unknown") {
  Presentation P = present_pure_orb_braid({2, 0, 1, {3}});
  Word lhs = pow(parse("a(2,1) c(2,1)"), 3);
  Word rhs = pow(parse("c(2,1) a(2,1)"), 3);
  SECTION("tiny state budget") {
    SearchBudget b;
    b.maxStates = 5;
    CHECK(prove_equal(P, lhs, rhs, b).status == ProveStatus::Unknown);
  }
  SECTION("zero depth") {
    SearchBudget b;
    b.maxDepth = 0;
    CHECK(prove_equal(P, lhs, rhs, b).status == ProveStatus::Unknown);
    CHECK(prove_equal(P, lhs, lhs, b).ok());
  }
  SECTION("full budget closes it") {
    ProveResult r = prove_equal(P, lhs, rhs);
    REQUIRE(r.ok());
    CHECK(word_key(verify_trace(P, lhs, r.trace)) == word_key(free_reduce(rhs)));
  }
}

TEST_CASE("no relators means no progress") {
  Presentation P = present_pure_orb_braid({1, 1, 0, {}});
  CHECK(prove_equal(P, parse("b(1,1)"), {}).status == ProveStatus::Unknown);
  CHECK(prove_equal(P, parse("b(1,1)"), parse("b(1,1)")).ok());
}

TEST_CASE("foreign letters are rejected") {
  Presentation P = present_orb_braid({2, 0, 1, {2}});
  CHECK_THROWS_AS(prove_equal(P, parse("x1"), {}), std::invalid_argument);
  CHECK_THROWS_AS(prove_equal(P, parse("h1"), parse("h2")), std::invalid_argument);
}

TEST_CASE("disproof oracles") {
  GroupParams p{3, 2, 1, {2}};
  std::vector<EqualityOracle> oracles = {perm_oracle(p.n), abel_oracle(p)};
  SECTION("permutation certificate") {
    auto cert = disprove_equal(parse("h1"), {}, oracles);
    REQUIRE(cert.has_value());
    CHECK(cert->oracle == "perm");
    CHECK(cert->image1 != cert->image2);
  }
  SECTION("abelianization certificate") {
    auto cert = disprove_equal(parse("t1"), parse("t2"), oracles);
    REQUIRE(cert.has_value());
    CHECK(cert->oracle == "abel");
  }
  SECTION("torsion exponent wraps") {
    auto cert = disprove_equal(parse("u1^2"), {}, oracles);
    CHECK(!cert.has_value());
    cert = disprove_equal(parse("u1"), {}, oracles);
    REQUIRE(cert.has_value());
    CHECK(cert->oracle == "abel");
  }
}

TEST_CASE("oracles kill every relator") {
  for (GroupParams p : {GroupParams{3, 1, 1, {3}}, GroupParams{2, 1, 1, {2}},
                        GroupParams{3, 1, 2, {2, 3}}}) {
    Presentation P = present_orb_braid(p);
    for (const EqualityOracle& o : {perm_oracle(p.n), abel_oracle(p)})
      for (const Word& r : P.relators) {
        INFO(P.label << " " << o.name << " " << format(r));
        CHECK(o.canon(r) == o.canon({}));
      }
  }
}

TEST_CASE("prover and disprover never conflict") {
  GroupParams p{3, 1, 1, {2}};
  Presentation P = present_orb_braid(p);
  std::vector<EqualityOracle> oracles = {perm_oracle(p.n), abel_oracle(p)};
  std::mt19937 rng(20240917);
  std::vector<Letter> alpha;
  for (int j = 1; j < p.n; ++j) alpha.push_back(Letter("h", j));
  for (int l = 1; l <= p.L; ++l) alpha.push_back(Letter("t", l));
  for (int v = 1; v <= p.N; ++v) alpha.push_back(Letter("u", v));
  auto random_word = [&]() {
    std::uniform_int_distribution<size_t> pick(0, alpha.size() - 1);
    std::uniform_int_distribution<int> len(0, 5), sign(0, 1);
    Word w;
    int k = len(rng);
    for (int q = 0; q < k; ++q) {
      Letter l = alpha[pick(rng)];
      if (sign(rng)) l = l.inverse();
      w.push_back(l);
    }
    return w;
  };
  SearchBudget small;
  small.maxStates = 20000;
  small.maxDepth = 8;
  int proven = 0, refuted = 0;
  for (int it = 0; it < 60; ++it) {
    Word w1 = random_word(), w2 = random_word();
    ProveResult pr = prove_equal(P, w1, w2, small);
    auto cert = disprove_equal(w1, w2, oracles);
    INFO(format(w1) << " vs " << format(w2));
    CHECK(!(pr.ok() && cert.has_value()));
    if (pr.ok()) {
      ++proven;
      CHECK(word_key(verify_trace(P, w1, pr.trace)) == word_key(free_reduce(w2)));
    }
    if (cert) ++refuted;
  }
  CHECK(proven > 0);
  CHECK(refuted > 0);
}
