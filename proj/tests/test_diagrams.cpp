#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "orbibraid/diagrams.hpp"
#include "orbibraid/homs.hpp"
#include "orbibraid/presentations.hpp"
#include "orbibraid/prover.hpp"

using namespace orbibraid;

namespace {

const std::vector<GroupParams> kGrid = {
    {2, 0, 1, {2}}, {2, 1, 1, {2}}, {2, 1, 1, {3}},
    {3, 1, 1, {3}}, {3, 1, 2, {2, 3}}, {3, 2, 1, {3}},
};

Word random_htu_word(std::mt19937& rng, const GroupParams& p, int maxLen) {
  std::vector<Letter> pool;
  for (int j = 1; j < p.n; ++j) pool.push_back(Letter("h", j));
  for (int lam = 1; lam <= p.L; ++lam) pool.push_back(Letter("t", lam));
  for (int nu = 1; nu <= p.N; ++nu) pool.push_back(Letter("u", nu));
  std::uniform_int_distribution<int> len(0, maxLen);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  Word w;
  int k = len(rng);
  for (int i = 0; i < k; ++i) {
    Letter l = pool[pick(rng)];
    if (sgn(rng)) l = l.inverse();
    w.push_back(l);
  }
  return w;
}

}  // namespace

TEST_CASE("generator words project to their blocks") {
  SECTION("h1 is a single positive crossing") {
    Diagram d = word_to_diagram(parse("h1"), {2, 0, 1, {2}});
    REQUIRE(d.events.size() == 1);
    CHECK(d.events[0] == DiagramEvent::strand_cross(1, 1));
  }
  SECTION("u1 leaps with the first strand and crosses no puncture") {
    Diagram d = word_to_diagram(parse("u1"), {2, 1, 1, {2}});
    REQUIRE(d.events.size() == 1);
    CHECK(d.events[0] == DiagramEvent::gamma_leap(1, 1, 1));
    for (const DiagramEvent& e : d.events) CHECK(e.kind != EventKind::PunctureCross);
  }
  SECTION("t1 encircles the puncture bar, in front then behind") {
    Diagram d = word_to_diagram(parse("t1"), {2, 1, 1, {2}});
    REQUIRE(d.events.size() == 2);
    CHECK(d.events[0] == DiagramEvent::puncture_cross(1, 1, true));
    CHECK(d.events[1] == DiagramEvent::puncture_cross(1, 1, false));
  }
  SECTION("the empty word projects to the empty diagram") {
    Diagram d = word_to_diagram(parse("1"), {3, 1, 1, {3}});
    CHECK(d.events.empty());
  }
  SECTION("blocks follow the strand occupying position 1") {
    Diagram d = word_to_diagram(parse("h1^-1 u1^2 h1"), {2, 0, 1, {2}});
    REQUIRE(d.events.size() == 4);
    CHECK(d.events[1] == DiagramEvent::gamma_leap(2, 1, 1));
    CHECK(d.events[2] == DiagramEvent::gamma_leap(2, 1, 1));
  }
  SECTION("other alphabets are rejected") {
    CHECK_THROWS_AS(word_to_diagram(parse("x1"), {2, 0, 1, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(word_to_diagram(parse("h2"), {2, 0, 1, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(word_to_diagram(parse("t1"), {2, 0, 1, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(word_to_diagram(parse("u2"), {2, 0, 1, {2}}), std::invalid_argument);
  }
}

TEST_CASE("diagram_to_word inverts word_to_diagram") {
  SECTION("a mixed word round-trips verbatim") {
    GroupParams p{2, 1, 1, {3}};
    Word w = parse("h1 u1 h1^-1");
    CHECK(diagram_to_word(word_to_diagram(w, p)) == w);
  }
  SECTION("a clockwise leap block reads back as an inverse letter") {
    Diagram d;
    d.params = {3, 1, 2, {2, 3}};
    d.events.push_back(DiagramEvent::gamma_leap(1, 2, -1));
    CHECK(format(diagram_to_word(d)) == "u2^-1");
  }
  SECTION("1000 random words per parameter set round-trip exactly") {
    std::mt19937 rng(20250301);
    for (const GroupParams& p : kGrid) {
      for (int t = 0; t < 1000; ++t) {
        Word w = random_htu_word(rng, p, 12);
        Diagram d = word_to_diagram(w, p);
        CHECK(diagram_to_word(d) == w);
      }
    }
  }
  SECTION("non-block event sequences are rejected") {
    GroupParams p{2, 1, 1, {2}};
    Diagram unpaired{p, {DiagramEvent::puncture_cross(1, 1, true)}};
    CHECK_THROWS_AS(diagram_to_word(unpaired), std::invalid_argument);
    Diagram samesides{p,
                      {DiagramEvent::puncture_cross(1, 1, true),
                       DiagramEvent::puncture_cross(1, 1, true)}};
    CHECK_THROWS_AS(diagram_to_word(samesides), std::invalid_argument);
    Diagram away{p, {DiagramEvent::gamma_leap(2, 1, 1)}};
    CHECK_THROWS_AS(diagram_to_word(away), std::invalid_argument);
  }
}

TEST_CASE("permutation extraction matches the strand permutation of the word") {
  SECTION("h1 h2 cycles three strands") {
    GroupParams p{3, 0, 1, {2}};
    Diagram d = word_to_diagram(parse("h1 h2"), p);
    CHECK(permutation(d) == std::vector<int>{2, 3, 1});
    CHECK(permutation(d) == perm_image(parse("h1 h2"), p));
  }
  SECTION("puncture and cone braids are pure") {
    GroupParams p{3, 1, 2, {2, 3}};
    CHECK(permutation(word_to_diagram(parse("t1 u2"), p)) == std::vector<int>{1, 2, 3});
  }
  SECTION("random words agree with perm_image") {
    std::mt19937 rng(4242);
    for (const GroupParams& p : kGrid) {
      for (int t = 0; t < 170; ++t) {
        Word w = random_htu_word(rng, p, 14);
        CHECK(permutation(word_to_diagram(w, p)) == perm_image(w, p));
      }
    }
  }
}

TEST_CASE("orbifold Reidemeister moves delete and insert full leap blocks") {
  SECTION("u1^3 at order three vanishes") {
    GroupParams p{2, 1, 1, {3}};
    Diagram d = word_to_diagram(parse("u1 u1 u1"), p);
    Diagram r = apply_orbifold_reidemeister(d, {0, 1, 1, false});
    CHECK(r.events.empty());
  }
  SECTION("the inverse move inserts the block into the empty diagram") {
    GroupParams p{2, 1, 1, {3}};
    Diagram d = word_to_diagram({}, p);
    Diagram r = apply_orbifold_reidemeister(d, {0, 1, 1, true});
    REQUIRE(r.events.size() == 3);
    CHECK(format(diagram_to_word(r)) == "u1^3");
  }
  SECTION("deletion at order two under a conjugating crossing") {
    GroupParams p{2, 0, 1, {2}};
    Diagram d = word_to_diagram(parse("h1^-1 u1^2 h1"), p);
    Diagram r = apply_orbifold_reidemeister(d, {1, 1, 1, false});
    Word w = diagram_to_word(r);
    CHECK(format(w) == "h1^-1 h1");
    CHECK(free_reduce(w).empty());
  }
  SECTION("insertion tracks the strand at position 1") {
    GroupParams p{2, 0, 1, {2}};
    Diagram d = word_to_diagram(parse("h1"), p);
    Diagram r = apply_orbifold_reidemeister(d, {1, 1, -1, true});
    REQUIRE(r.events.size() == 3);
    CHECK(r.events[1] == DiagramEvent::gamma_leap(2, 1, -1));
    CHECK(r.events[2] == DiagramEvent::gamma_leap(2, 1, -1));
  }
  SECTION("partial or misaligned blocks are rejected") {
    GroupParams p{2, 1, 1, {3}};
    Diagram d = word_to_diagram(parse("u1 u1 h1"), p);
    CHECK_THROWS_AS(apply_orbifold_reidemeister(d, {0, 1, 1, false}), std::invalid_argument);
    Diagram e = word_to_diagram(parse("u1 u1^-1 u1"), p);
    CHECK_THROWS_AS(apply_orbifold_reidemeister(e, {0, 1, 1, false}), std::invalid_argument);
  }
  SECTION("the move preserves provable equality") {
    GroupParams p{2, 1, 1, {3}};
    Presentation pres = present_orb_braid(p);
    std::mt19937 rng(77001);
    for (int t = 0; t < 12; ++t) {
      Word w = random_htu_word(rng, p, 6);
      Diagram d = word_to_diagram(w, p);
      std::vector<size_t> sites;
      for (size_t i = 0; i <= d.events.size(); ++i) {
        if (i > 0 && i < d.events.size() &&
            d.events[i - 1].kind == EventKind::PunctureCross &&
            d.events[i].kind == EventKind::PunctureCross &&
            d.events[i - 1].over != d.events[i].over)
          continue;
        sites.push_back(i);
      }
      std::uniform_int_distribution<size_t> at(0, sites.size() - 1);
      ReidemeisterSite site{sites[at(rng)], 1, t % 2 ? 1 : -1, true};
      Diagram r = apply_orbifold_reidemeister(d, site);
      ProveResult res = prove_equal(pres, w, diagram_to_word(r));
      REQUIRE(res.ok());
    }
  }
}

TEST_CASE("renders are deterministic and carry the layout") {
  GroupParams p{3, 1, 2, {2, 3}};
  SECTION("the empty diagram shows straight strands and all bars") {
    Diagram d = word_to_diagram({}, p);
    std::string a = render(d, RenderFormat::Ascii);
    CHECK(a == render_ascii(d));
    std::string firstRow = a.substr(0, a.find('\n'));
    CHECK(firstRow.find('A') != std::string::npos);
    CHECK(firstRow.find('o') != std::string::npos);
    size_t cones = 0, punctures = 0, strands = 0;
    for (char ch : firstRow) {
      if (ch == 'A') ++cones;
      if (ch == 'o') ++punctures;
      if (ch >= '1' && ch <= '9') ++strands;
    }
    CHECK(cones == 2);
    CHECK(punctures == 1);
    CHECK(strands == 3);
    std::string body = a.substr(a.find('\n') + 1);
    CHECK(std::count(body.begin(), body.end(), '|') == 9);
    CHECK(std::count(body.begin(), body.end(), '!') == 6);
    CHECK(std::count(body.begin(), body.end(), ':') == 3);
  }
  SECTION("svg output is well formed and byte-stable") {
    Word w = parse("h1 t1 u2^-1 h2^-1 u1");
    Diagram d = word_to_diagram(w, p);
    std::string s1 = render(d, RenderFormat::Svg);
    std::string s2 = render_svg(word_to_diagram(w, p));
    CHECK(s1 == s2);
    CHECK(s1.rfind("<svg", 0) == 0);
    CHECK(s1.find("#c22") != std::string::npos);
    CHECK(s1.find("#24c") != std::string::npos);
    CHECK(s1.find("</svg>") != std::string::npos);
  }
  SECTION("ascii crossings carry the over sign in the middle row") {
    GroupParams q{2, 0, 1, {2}};
    std::string plus = render_ascii(word_to_diagram(parse("h1"), q));
    std::string minus = render_ascii(word_to_diagram(parse("h1^-1"), q));
    CHECK(plus != minus);
    CHECK(plus.find('\\') != std::string::npos);
    CHECK(minus.find('/') != std::string::npos);
  }
  SECTION("ascii renders are byte-stable across copies") {
    Word w = parse("t1 h1 u1 h2 t1^-1 u2^-1");
    std::string r1 = render_ascii(word_to_diagram(w, p));
    std::string r2 = render_ascii(word_to_diagram(parse(format(w)), p));
    CHECK(r1 == r2);
  }
}
