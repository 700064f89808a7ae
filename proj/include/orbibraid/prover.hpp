#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "orbibraid/presentations.hpp"
#include "orbibraid/words.hpp"

namespace orbibraid {

struct SearchBudget {
  long long maxStates = 1000000;
  int maxWordLength = 64;
  int maxDepth = 24;  // total path length; each search side uses half
};

// One rewriting step: insert the given cyclic rotation of relator
// `relator` (inverted when sign < 0) at letter position `pos` of the
// current freely reduced word, then reduce again.
struct ProofStep {
  int pos;
  int relator;
  int rotation;
  int sign;
};

struct ProofTrace {
  std::vector<ProofStep> steps;
};

enum class ProveStatus { Proven, Unknown };

struct ProveResult {
  ProveStatus status = ProveStatus::Unknown;
  ProofTrace trace;
  long long statesExplored = 0;
  bool ok() const { return status == ProveStatus::Proven; }
};

namespace detail {

inline Word rotate_word(const Word& w, int r) {
  Word out;
  out.reserve(w.size());
  for (size_t k = 0; k < w.size(); ++k)
    out.push_back(w[(k + static_cast<size_t>(r)) % w.size()]);
  return out;
}

inline Word word_from_key(const std::string& key) {
  Word w;
  w.reserve(key.size() / 4);
  for (size_t p = 0; p + 3 < key.size(); p += 4) {
    Letter l;
    l.fam = key[p] - 1;
    l.i = key[p + 1] - 1;
    l.j = key[p + 2] - 1;
    l.sgn = key[p + 3] == '+' ? 1 : -1;
    w.push_back(l);
  }
  return w;
}

struct Move {
  Word word;
  int relator;
  int rotation;
  int sign;
};

inline std::vector<Move> relator_moves(const Presentation& pres) {
  std::vector<Move> moves;
  std::unordered_map<std::string, bool> seen;
  for (size_t ri = 0; ri < pres.relators.size(); ++ri) {
    for (int sign : {1, -1}) {
      Word base = sign > 0 ? pres.relators[ri] : inverse(pres.relators[ri]);
      for (int rot = 0; rot < static_cast<int>(base.size()); ++rot) {
        Word w = free_reduce(rotate_word(base, rot));
        if (w.empty()) continue;
        std::string key = word_key(w);
        if (seen.emplace(key, true).second)
          moves.push_back({std::move(w), static_cast<int>(ri), rot, sign});
      }
    }
  }
  return moves;
}

inline Word insert_and_reduce(const Word& w, const Word& ins, int pos) {
  Word out;
  out.reserve(w.size() + ins.size());
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), ins.begin(), ins.end());
  out.insert(out.end(), w.begin() + pos, w.end());
  return free_reduce(out);
}

}  // namespace detail

inline Word verify_trace(const Presentation& pres, const Word& w1, const ProofTrace& trace) {
  Word cur = free_reduce(w1);
  for (const ProofStep& s : trace.steps) {
    if (s.relator < 0 || s.relator >= static_cast<int>(pres.relators.size()))
      throw std::invalid_argument("trace: relator index out of range");
    Word base = s.sign > 0 ? pres.relators[static_cast<size_t>(s.relator)]
                           : inverse(pres.relators[static_cast<size_t>(s.relator)]);
    if (s.rotation < 0 || s.rotation >= static_cast<int>(base.size()))
      throw std::invalid_argument("trace: rotation out of range");
    Word ins = free_reduce(detail::rotate_word(base, s.rotation));
    if (s.pos < 0 || s.pos > static_cast<int>(cur.size()))
      throw std::invalid_argument("trace: position out of range");
    cur = detail::insert_and_reduce(cur, ins, s.pos);
  }
  return cur;
}

// Bounded bidirectional search for a derivation w1 -> w2 by relator
// insertions. States are freely reduced words, deduplicated per side; the
// frontier is expanded shortest-word-first. The length cap is iteratively
// deepened up to budget.maxWordLength: tight caps saturate quickly, so the
// state budget is spent near the start words before the space widens.
// Words sharing a prefix or suffix are first attacked on the stripped
// cores (equivalent in the group); the core trace lifts into context by a
// position shift and is accepted only if it replays. A lift can fail when
// an intermediate word cancels into the stripped context, so on failure
// the cores are retried with a widening margin of context letters. Either
// way this is a pure accelerator over the direct search.
inline ProveResult prove_equal(const Presentation& pres, const Word& w1, const Word& w2,
                               const SearchBudget& budget = {}) {
  pres.alphabet.validate(w1);
  pres.alphabet.validate(w2);
  std::vector<detail::Move> moves = detail::relator_moves(pres);

  Word start[2] = {free_reduce(w1), free_reduce(w2)};
  std::string startKey[2] = {word_key(start[0]), word_key(start[1])};

  if (startKey[0] == startKey[1]) {
    ProveResult res;
    res.status = ProveStatus::Proven;
    return res;
  }
  if (moves.empty()) return {};

  int perSideDepth = (budget.maxDepth + 1) / 2;

  long long preSpent = 0;
  {
    size_t n0 = start[0].size(), n1 = start[1].size(), lim = std::min(n0, n1);
    size_t pre = 0;
    while (pre < lim && start[0][pre] == start[1][pre]) ++pre;
    size_t suf = 0;
    while (suf + pre < lim && start[0][n0 - 1 - suf] == start[1][n1 - 1 - suf]) ++suf;
    for (size_t margin = 0; pre + suf > 0; margin = margin ? margin * 2 : 1) {
      size_t usePre = pre > margin ? pre - margin : 0;
      size_t useSuf = suf > margin ? suf - margin : 0;
      if (usePre + useSuf == 0) break;
      Word core0(start[0].begin() + usePre, start[0].end() - useSuf);
      Word core1(start[1].begin() + usePre, start[1].end() - useSuf);
      SearchBudget left = budget;
      left.maxStates = budget.maxStates - preSpent;
      if (left.maxStates <= 0) break;
      ProveResult inner = prove_equal(pres, core0, core1, left);
      preSpent += inner.statesExplored;
      if (!inner.ok()) break;
      for (ProofStep& s : inner.trace.steps) s.pos += static_cast<int>(usePre);
      bool lifted = false;
      try {
        lifted = word_key(verify_trace(pres, start[0], inner.trace)) == startKey[1];
      } catch (const std::invalid_argument&) {
      }
      if (lifted) {
        inner.status = ProveStatus::Proven;
        inner.statesExplored = preSpent;
        return inner;
      }
    }
  }

  auto attempt = [&](int cap, long long statesLimit) -> ProveResult {
    struct Node {
      std::string key;
      int parent;
      ProofStep step;
      int depth;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, int> visited[2];

    ProveResult res;

    // One queue per side, popped alternately so that neither start word
    // floods the frontier before the other gets expanded at all (the ball
    // around a short word is dense). Within a side: short words, then low
    // depth.
    using QE = std::tuple<int, int, int>;  // len, depth, node
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq[2];

    for (int side : {0, 1}) {
      nodes.push_back({startKey[side], -1, {}, 0});
      visited[side][startKey[side]] = static_cast<int>(nodes.size()) - 1;
      pq[side].emplace(static_cast<int>(start[side].size()), 0,
                       static_cast<int>(nodes.size()) - 1);
    }
    res.statesExplored = 2;

    // Reconstructs the forward step list from the w1 start to node id.
    auto path_steps = [&](int id) {
      std::vector<ProofStep> steps;
      for (int cur = id; nodes[static_cast<size_t>(cur)].parent >= 0;
           cur = nodes[static_cast<size_t>(cur)].parent)
        steps.push_back(nodes[static_cast<size_t>(cur)].step);
      std::reverse(steps.begin(), steps.end());
      return steps;
    };

    // Finds a single insertion transforming `from` into the word with key
    // `wantKey`. Used to reverse edges of the w2-side path.
    auto reverse_edge = [&](const Word& from, const std::string& wantKey)
        -> std::optional<ProofStep> {
      for (const detail::Move& mv : moves)
        for (int pos = 0; pos <= static_cast<int>(from.size()); ++pos)
          if (word_key(detail::insert_and_reduce(from, mv.word, pos)) == wantKey)
            return ProofStep{pos, mv.relator, mv.rotation, mv.sign};
      return std::nullopt;
    };

    auto build_trace = [&](int idA, int idB) -> bool {
      // Forward part: w1 -> meet.
      std::vector<ProofStep> steps = path_steps(idA);
      // Backward part: reverse the path w2 -> meet edge by edge.
      std::vector<int> bPath;
      for (int cur = idB; cur >= 0; cur = nodes[static_cast<size_t>(cur)].parent)
        bPath.push_back(cur);
      // bPath = meet ... w2 (child to root); reverse each edge child<-parent
      for (size_t q = 0; q + 1 < bPath.size(); ++q) {
        Word from = detail::word_from_key(nodes[static_cast<size_t>(bPath[q])].key);
        auto st = reverse_edge(from, nodes[static_cast<size_t>(bPath[q + 1])].key);
        if (!st) return false;
        steps.push_back(*st);
      }
      res.trace.steps = std::move(steps);
      Word end = verify_trace(pres, w1, res.trace);
      if (word_key(end) != startKey[1])
        throw std::logic_error("prover: trace replay mismatch");
      res.status = ProveStatus::Proven;
      return true;
    };

    int turn = 0;
    while (!pq[0].empty() || !pq[1].empty()) {
      int side = pq[turn].empty() ? 1 - turn : turn;
      turn = 1 - turn;
      auto [len, depth, id] = pq[side].top();
      pq[side].pop();
      if (depth >= perSideDepth) continue;
      Word w = detail::word_from_key(nodes[static_cast<size_t>(id)].key);
      for (const detail::Move& mv : moves) {
        for (int pos = 0; pos <= static_cast<int>(w.size()); ++pos) {
          Word child = detail::insert_and_reduce(w, mv.word, pos);
          if (static_cast<int>(child.size()) > cap) continue;
          std::string key = word_key(child);
          if (visited[side].count(key)) continue;
          nodes.push_back(
              {key, id, ProofStep{pos, mv.relator, mv.rotation, mv.sign}, depth + 1});
          int nid = static_cast<int>(nodes.size()) - 1;
          visited[side][key] = nid;
          ++res.statesExplored;
          auto other = visited[1 - side].find(key);
          if (other != visited[1 - side].end()) {
            int idA = side == 0 ? nid : other->second;
            int idB = side == 0 ? other->second : nid;
            if (build_trace(idA, idB)) return res;
          }
          pq[side].emplace(static_cast<int>(child.size()), depth + 1, nid);
          if (res.statesExplored >= statesLimit) return res;
        }
      }
    }
    return res;
  };

  int maxMove = 0;
  for (const detail::Move& mv : moves)
    maxMove = std::max(maxMove, static_cast<int>(mv.word.size()));
  int base = static_cast<int>(std::max(start[0].size(), start[1].size())) + maxMove;
  base = std::min(base, budget.maxWordLength);

  long long spent = preSpent;
  for (int cap = base;; cap = std::min(cap + 4, budget.maxWordLength)) {
    if (spent >= budget.maxStates) break;
    ProveResult round = attempt(cap, budget.maxStates - spent);
    spent += round.statesExplored;
    round.statesExplored = spent;
    if (round.ok() || spent >= budget.maxStates || cap >= budget.maxWordLength) return round;
  }
  ProveResult out;
  out.statesExplored = spent;
  return out;
}

// Proves a chain of equalities W_0 = W_1 = ... = W_r hop by hop and stitches
// the hop traces into one certificate for W_0 = W_r. The state budget is
// shared across hops. Useful when a derivation has a known intermediate
// shape (an induction step, a substitution locus) that the blind search
// would have to rediscover.
inline ProveResult prove_equal_via(const Presentation& pres,
                                   const std::vector<Word>& waypoints,
                                   const SearchBudget& budget = {}) {
  if (waypoints.size() < 2)
    throw std::invalid_argument("prove_equal_via: need at least two waypoints");
  ProveResult out;
  for (size_t q = 0; q + 1 < waypoints.size(); ++q) {
    SearchBudget hop = budget;
    hop.maxStates = budget.maxStates - out.statesExplored;
    if (hop.maxStates <= 0) return out;
    ProveResult r = prove_equal(pres, waypoints[q], waypoints[q + 1], hop);
    out.statesExplored += r.statesExplored;
    if (!r.ok()) return out;
    out.trace.steps.insert(out.trace.steps.end(), r.trace.steps.begin(),
                           r.trace.steps.end());
  }
  Word end = verify_trace(pres, waypoints.front(), out.trace);
  if (word_key(end) != word_key(free_reduce(waypoints.back())))
    throw std::logic_error("prover: stitched trace replay mismatch");
  out.status = ProveStatus::Proven;
  return out;
}

// A sound disproof oracle: `canon` is a canonical form of the image of a
// word under a verified homomorphism into a group with decidable equality.
struct EqualityOracle {
  std::string name;
  std::function<std::string(const Word&)> canon;
};

struct DisproofCertificate {
  std::string oracle;
  std::string image1;
  std::string image2;
};

inline std::optional<DisproofCertificate> disprove_equal(
    const Word& w1, const Word& w2, const std::vector<EqualityOracle>& oracles) {
  for (const EqualityOracle& o : oracles) {
    std::string c1 = o.canon(w1);
    std::string c2 = o.canon(w2);
    if (c1 != c2) return DisproofCertificate{o.name, c1, c2};
  }
  return std::nullopt;
}

}  // namespace orbibraid
