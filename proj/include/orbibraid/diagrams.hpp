#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbibraid/params.hpp"
#include "orbibraid/words.hpp"

namespace orbibraid {

// Orbifold braid diagrams as ordered event sequences. Heights run top to
// bottom, one event per height slot. Strand crossings are indexed by
// position, puncture crossings and Gamma-leaps by strand, since the strand
// keeps its identity while its position changes.
enum class EventKind { StrandCross, PunctureCross, GammaLeap };

struct DiagramEvent {
  EventKind kind = EventKind::StrandCross;
  int pos = 0;     // StrandCross: position in 1..n-1
  int sign = 0;    // StrandCross: +1 when the strand at `pos` crosses over
  int strand = 0;  // PunctureCross / GammaLeap: strand id in 1..n
  int lam = 0;     // PunctureCross: puncture index in 1..L
  bool over = false;  // PunctureCross: strand passes in front of the bar
  int nu = 0;      // GammaLeap: cone index in 1..N
  int exp = 0;     // GammaLeap: +1 counterclockwise, -1 clockwise

  static DiagramEvent strand_cross(int pos, int sign) {
    DiagramEvent e;
    e.kind = EventKind::StrandCross;
    e.pos = pos;
    e.sign = sign;
    return e;
  }
  static DiagramEvent puncture_cross(int strand, int lam, bool over) {
    DiagramEvent e;
    e.kind = EventKind::PunctureCross;
    e.strand = strand;
    e.lam = lam;
    e.over = over;
    return e;
  }
  static DiagramEvent gamma_leap(int strand, int nu, int exp) {
    DiagramEvent e;
    e.kind = EventKind::GammaLeap;
    e.strand = strand;
    e.nu = nu;
    e.exp = exp;
    return e;
  }

  bool operator==(const DiagramEvent& o) const {
    return kind == o.kind && pos == o.pos && sign == o.sign && strand == o.strand &&
           lam == o.lam && over == o.over && nu == o.nu && exp == o.exp;
  }
  bool operator!=(const DiagramEvent& o) const { return !(*this == o); }
};

struct Diagram {
  GroupParams params;
  std::vector<DiagramEvent> events;

  bool operator==(const Diagram& o) const {
    return params == o.params && events == o.events;
  }
};

inline void validate(const Diagram& d) {
  d.params.validate();
  for (const DiagramEvent& e : d.events) {
    switch (e.kind) {
      case EventKind::StrandCross:
        if (e.pos < 1 || e.pos >= d.params.n)
          throw std::invalid_argument("diagram: crossing position out of range");
        if (e.sign != 1 && e.sign != -1)
          throw std::invalid_argument("diagram: crossing sign must be +1 or -1");
        break;
      case EventKind::PunctureCross:
        if (e.strand < 1 || e.strand > d.params.n)
          throw std::invalid_argument("diagram: strand id out of range");
        if (e.lam < 1 || e.lam > d.params.L)
          throw std::invalid_argument("diagram: puncture index out of range");
        break;
      case EventKind::GammaLeap:
        if (e.strand < 1 || e.strand > d.params.n)
          throw std::invalid_argument("diagram: strand id out of range");
        if (e.nu < 1 || e.nu > d.params.N)
          throw std::invalid_argument("diagram: cone index out of range");
        if (e.exp != 1 && e.exp != -1)
          throw std::invalid_argument("diagram: a Gamma-leap exponent must be +1 or -1");
        break;
    }
  }
}

namespace detail {

// Strand occupying each position, folded over the crossings of a prefix.
inline std::vector<int> occupancy(const Diagram& d, size_t upto) {
  std::vector<int> at(static_cast<size_t>(d.params.n));
  for (int j = 0; j < d.params.n; ++j) at[static_cast<size_t>(j)] = j + 1;
  for (size_t q = 0; q < upto && q < d.events.size(); ++q) {
    const DiagramEvent& e = d.events[q];
    if (e.kind == EventKind::StrandCross)
      std::swap(at[static_cast<size_t>(e.pos) - 1], at[static_cast<size_t>(e.pos)]);
  }
  return at;
}

}  // namespace detail

// One event block per letter. h_j is a single crossing. t_lam sends the
// strand at position 1 around the lam-th puncture: it crosses the bar twice,
// in front on the way out and behind on the way back. u_nu records a single
// Gamma-leap of the strand at position 1. Inverse letters emit the blocks
// mirrored. Crossings with bars the strand merely passes on the way are
// isotopically removable pokes and are not recorded (block normal form).
inline Diagram word_to_diagram(const Word& w, const GroupParams& p) {
  p.validate();
  Diagram d;
  d.params = p;
  std::vector<int> at(static_cast<size_t>(p.n));
  for (int j = 0; j < p.n; ++j) at[static_cast<size_t>(j)] = j + 1;
  for (const Letter& l : w) {
    const std::string& fam = l.family();
    if (fam == "h") {
      if (l.j != 0 || l.i < 1 || l.i >= p.n)
        throw std::invalid_argument("word_to_diagram: letter '" + l.to_string() +
                                    "' is not a braid generator at these parameters");
      d.events.push_back(DiagramEvent::strand_cross(l.i, l.sgn));
      std::swap(at[static_cast<size_t>(l.i) - 1], at[static_cast<size_t>(l.i)]);
    } else if (fam == "t") {
      if (l.j != 0 || l.i < 1 || l.i > p.L)
        throw std::invalid_argument("word_to_diagram: letter '" + l.to_string() +
                                    "' is not a braid generator at these parameters");
      int s = at[0];
      d.events.push_back(DiagramEvent::puncture_cross(s, l.i, l.sgn > 0));
      d.events.push_back(DiagramEvent::puncture_cross(s, l.i, l.sgn < 0));
    } else if (fam == "u") {
      if (l.j != 0 || l.i < 1 || l.i > p.N)
        throw std::invalid_argument("word_to_diagram: letter '" + l.to_string() +
                                    "' is not a braid generator at these parameters");
      d.events.push_back(DiagramEvent::gamma_leap(at[0], l.i, l.sgn));
    } else {
      throw std::invalid_argument("word_to_diagram: letter '" + l.to_string() +
                                  "' is not over the h/t/u alphabet");
    }
  }
  return d;
}

// Inverse of word_to_diagram on block-structured diagrams. Puncture
// crossings must pair up adjacently with opposite sides, and puncture and
// leap blocks must act on the strand at position 1; anything else is not the
// projection of a generator word.
inline Word diagram_to_word(const Diagram& d) {
  validate(d);
  Word w;
  std::vector<int> at(static_cast<size_t>(d.params.n));
  for (int j = 0; j < d.params.n; ++j) at[static_cast<size_t>(j)] = j + 1;
  for (size_t q = 0; q < d.events.size(); ++q) {
    const DiagramEvent& e = d.events[q];
    switch (e.kind) {
      case EventKind::StrandCross:
        w.push_back(Letter("h", e.pos, e.sign));
        std::swap(at[static_cast<size_t>(e.pos) - 1], at[static_cast<size_t>(e.pos)]);
        break;
      case EventKind::PunctureCross: {
        if (e.strand != at[0])
          throw std::invalid_argument(
              "diagram_to_word: puncture block on a strand away from position 1");
        if (q + 1 >= d.events.size())
          throw std::invalid_argument("diagram_to_word: unpaired puncture crossing");
        const DiagramEvent& f = d.events[q + 1];
        if (f.kind != EventKind::PunctureCross || f.strand != e.strand ||
            f.lam != e.lam || f.over == e.over)
          throw std::invalid_argument("diagram_to_word: unpaired puncture crossing");
        w.push_back(Letter("t", e.lam, e.over ? 1 : -1));
        ++q;
        break;
      }
      case EventKind::GammaLeap:
        if (e.strand != at[0])
          throw std::invalid_argument(
              "diagram_to_word: Gamma-leap on a strand away from position 1");
        w.push_back(Letter("u", e.nu, e.exp));
        break;
    }
  }
  return w;
}

// Strand ending up at each position, same fold as perm_image on words.
inline std::vector<int> permutation(const Diagram& d) {
  validate(d);
  return detail::occupancy(d, d.events.size());
}

// Site of an orbifold Reidemeister move: m_nu consecutive equal leaps
// starting at `index` are deleted, or inserted there for the inverse move.
struct ReidemeisterSite {
  size_t index = 0;
  int nu = 1;
  int sign = 1;
  bool insert = false;
};

// The additional Reidemeister move: a strand encircling the nu-th cone point
// bar m_nu consecutive times bounds a disk in the quotient, so the block may
// be removed or introduced freely. The word of the result differs from the
// original by a conjugate of u_nu^{+-m_nu}.
inline Diagram apply_orbifold_reidemeister(const Diagram& d, const ReidemeisterSite& site) {
  validate(d);
  if (site.nu < 1 || site.nu > d.params.N)
    throw std::invalid_argument("reidemeister: cone index out of range");
  if (site.sign != 1 && site.sign != -1)
    throw std::invalid_argument("reidemeister: sign must be +1 or -1");
  size_t m = static_cast<size_t>(d.params.order(site.nu));
  Diagram out = d;
  if (site.insert) {
    if (site.index > d.events.size())
      throw std::invalid_argument("reidemeister: site mismatch");
    if (site.index > 0 && site.index < d.events.size()) {
      const DiagramEvent& a = d.events[site.index - 1];
      const DiagramEvent& b = d.events[site.index];
      if (a.kind == EventKind::PunctureCross && b.kind == EventKind::PunctureCross &&
          a.strand == b.strand && a.lam == b.lam && a.over != b.over)
        throw std::invalid_argument("reidemeister: site splits a puncture block");
    }
    std::vector<int> at = detail::occupancy(d, site.index);
    DiagramEvent leap = DiagramEvent::gamma_leap(at[0], site.nu, site.sign);
    out.events.insert(out.events.begin() + static_cast<std::ptrdiff_t>(site.index), m, leap);
    return out;
  }
  if (site.index + m > d.events.size())
    throw std::invalid_argument("reidemeister: site mismatch");
  const DiagramEvent& first = d.events[site.index];
  if (first.kind != EventKind::GammaLeap || first.nu != site.nu || first.exp != site.sign)
    throw std::invalid_argument("reidemeister: site mismatch");
  for (size_t q = site.index; q < site.index + m; ++q)
    if (d.events[q] != first)
      throw std::invalid_argument("reidemeister: site mismatch");
  out.events.erase(out.events.begin() + static_cast<std::ptrdiff_t>(site.index),
                   out.events.begin() + static_cast<std::ptrdiff_t>(site.index + m));
  return out;
}

// --- rendering ---------------------------------------------------------------
//
// Layout follows the fundamental domain: cone nu sits at x = -L-nu, puncture
// lam at x = -lam, strand j starts at x = j. A continued line crosses in
// front, a broken line behind. Excursions to a bar pass in front of every bar
// strictly between; a leap crosses its bar in front on the way out and behind
// on the way back when the exponent is +1, mirrored for -1.

enum class RenderFormat { Svg, Ascii };

namespace detail {

struct AsciiCanvas {
  std::vector<std::string> rows;
  size_t width;

  AsciiCanvas(size_t h, size_t w) : rows(h, std::string(w, ' ')), width(w) {}
  void put(size_t r, size_t c, char ch) {
    if (r < rows.size() && c < width) rows[r][c] = ch;
  }
  void run(size_t r, size_t c1, size_t c2, char ch) {
    for (size_t c = c1; c <= c2 && c < width; ++c) put(r, c, ch);
  }
  std::string str() const {
    std::string out;
    for (const std::string& row : rows) {
      out += row;
      while (!out.empty() && out.back() == ' ') out.pop_back();
      out += '\n';
    }
    return out;
  }
};

inline size_t ascii_col(const GroupParams& p, int x) {
  return static_cast<size_t>((x + p.L + p.N) * 4 + 2);
}

// Bar columns with their plain glyph, leftmost first.
inline std::vector<std::pair<size_t, char>> ascii_bars(const GroupParams& p) {
  std::vector<std::pair<size_t, char>> bars;
  for (int nu = p.N; nu >= 1; --nu) bars.push_back({ascii_col(p, -p.L - nu), '!'});
  for (int lam = p.L; lam >= 1; --lam) bars.push_back({ascii_col(p, -lam), ':'});
  return bars;
}

// Horizontal excursion leg at row r from bar column b to strand column c.
// `front` continues the line through the bar; otherwise the bar survives and
// the line is broken around it. Bars and strand columns strictly between are
// passed in front.
inline void ascii_leg(AsciiCanvas& cv, size_t r, size_t b, size_t c, bool front) {
  cv.run(r, front ? b : b + 1, c - 1, '-');
  if (!front) cv.put(r, b - 1, '-');
}

}  // namespace detail

inline std::string render_ascii(const Diagram& d) {
  validate(d);
  const GroupParams& p = d.params;
  size_t slots = std::max<size_t>(d.events.size(), 1);
  size_t width = static_cast<size_t>((p.n + p.L + p.N) * 4 + 3);
  detail::AsciiCanvas cv(1 + 3 * slots, width);

  std::vector<std::pair<size_t, char>> bars = detail::ascii_bars(p);
  for (int nu = 1; nu <= p.N; ++nu) cv.put(0, detail::ascii_col(p, -p.L - nu), 'A');
  for (int lam = 1; lam <= p.L; ++lam) cv.put(0, detail::ascii_col(p, -lam), 'o');
  for (int j = 1; j <= p.n; ++j)
    cv.put(0, detail::ascii_col(p, j), static_cast<char>('0' + j % 10));

  std::vector<int> at(static_cast<size_t>(p.n));
  for (int j = 0; j < p.n; ++j) at[static_cast<size_t>(j)] = j + 1;
  auto pos_of = [&](int strand) {
    for (int q = 0; q < p.n; ++q)
      if (at[static_cast<size_t>(q)] == strand) return q + 1;
    return 1;
  };

  // Columns a strand leaves vacant while away on an excursion, by row.
  std::vector<std::vector<size_t>> vacant(1 + 3 * slots);

  size_t q = 0;
  for (size_t slot = 0; slot < slots; ++slot) {
    size_t r0 = 1 + 3 * slot;
    if (q >= d.events.size()) break;
    const DiagramEvent& e = d.events[q];
    if (e.kind == EventKind::StrandCross) {
      size_t cL = detail::ascii_col(p, e.pos), cR = detail::ascii_col(p, e.pos + 1);
      cv.put(r0, cL + 1, '\\');
      cv.put(r0, cR - 1, '/');
      cv.put(r0 + 1, cL + 2, e.sign > 0 ? '\\' : '/');
      cv.put(r0 + 2, cL + 1, '/');
      cv.put(r0 + 2, cR - 1, '\\');
      vacant[r0].push_back(cL);
      vacant[r0].push_back(cR);
      vacant[r0 + 1].push_back(cL);
      vacant[r0 + 1].push_back(cR);
      vacant[r0 + 2].push_back(cL);
      vacant[r0 + 2].push_back(cR);
      std::swap(at[static_cast<size_t>(e.pos) - 1], at[static_cast<size_t>(e.pos)]);
      ++q;
      continue;
    }
    if (e.kind == EventKind::GammaLeap) {
      size_t b = detail::ascii_col(p, -p.L - e.nu);
      size_t c = detail::ascii_col(p, pos_of(e.strand));
      detail::ascii_leg(cv, r0, b, c, e.exp > 0);
      cv.put(r0, b - 1, '.');
      cv.put(r0, c, '+');
      cv.put(r0 + 1, b - 1, '(');
      detail::ascii_leg(cv, r0 + 2, b, c, e.exp < 0);
      cv.put(r0 + 2, b - 1, '\'');
      cv.put(r0 + 2, c, '+');
      vacant[r0 + 1].push_back(c);
      ++q;
      continue;
    }
    // Puncture crossing: adjacent opposite pairs render as one round trip
    // over two slots, a stray crossing as a one-slot poke.
    size_t b = detail::ascii_col(p, -e.lam);
    size_t c = detail::ascii_col(p, pos_of(e.strand));
    bool paired = q + 1 < d.events.size() && d.events[q + 1].kind == EventKind::PunctureCross &&
                  d.events[q + 1].strand == e.strand && d.events[q + 1].lam == e.lam &&
                  d.events[q + 1].over != e.over;
    if (paired) {
      detail::ascii_leg(cv, r0, b, c, e.over);
      cv.put(r0, b - 2, '.');
      cv.put(r0, b - 1, '-');
      cv.put(r0, c, '+');
      for (size_t r = r0 + 1; r <= r0 + 4; ++r) cv.put(r, b - 2, '|');
      detail::ascii_leg(cv, r0 + 5, b, c, d.events[q + 1].over);
      cv.put(r0 + 5, b - 2, '\'');
      cv.put(r0 + 5, b - 1, '-');
      cv.put(r0 + 5, c, '+');
      for (size_t r = r0 + 1; r <= r0 + 4; ++r) vacant[r].push_back(c);
      q += 2;
      ++slot;
    } else {
      detail::ascii_leg(cv, r0, b, c, e.over);
      cv.put(r0, b - 1, '.');
      cv.put(r0, c, '+');
      cv.put(r0 + 1, b - 1, '(');
      detail::ascii_leg(cv, r0 + 2, b, c, e.over);
      cv.put(r0 + 2, b - 1, '\'');
      cv.put(r0 + 2, c, '+');
      vacant[r0 + 1].push_back(c);
      ++q;
    }
  }

  // Fill plain verticals wherever nothing was drawn.
  for (size_t r = 1; r < cv.rows.size(); ++r) {
    for (const auto& [col, ch] : bars)
      if (cv.rows[r][col] == ' ') cv.put(r, col, ch);
    for (int j = 1; j <= p.n; ++j) {
      size_t col = detail::ascii_col(p, j);
      bool away = std::find(vacant[r].begin(), vacant[r].end(), col) != vacant[r].end();
      if (!away && cv.rows[r][col] == ' ') cv.put(r, col, '|');
    }
  }
  return cv.str();
}

namespace detail {

struct SvgSeg {
  double x1, y1, x2, y2;
};

inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

inline double svg_x(const GroupParams& p, double x) {
  return 24.0 + (x + p.L + p.N) * 24.0;
}

// Cuts `hole` +- radius out of a segment run parameterised by y.
inline void svg_cut(std::vector<std::pair<double, double>>& spans, double hole, double r) {
  std::vector<std::pair<double, double>> out;
  for (auto [a, b] : spans) {
    if (hole - r <= a && b <= hole + r) continue;
    if (b < hole - r || a > hole + r) {
      out.push_back({a, b});
      continue;
    }
    if (a < hole - r) out.push_back({a, hole - r});
    if (b > hole + r) out.push_back({hole + r, b});
  }
  spans = out;
}

}  // namespace detail

inline std::string render_svg(const Diagram& d) {
  validate(d);
  const GroupParams& p = d.params;
  const double RH = 36.0, TOP = 30.0, GAP = 5.0;
  size_t slots = std::max<size_t>(d.events.size(), 1);
  double width = 48.0 + (p.n + p.L + p.N) * 24.0;
  double height = TOP + RH * static_cast<double>(slots) + 24.0;
  double yBot = height - 18.0;

  std::vector<detail::SvgSeg> strands;                 // black
  std::vector<double> barX;                            // bar index -> x
  std::vector<std::vector<std::pair<double, double>>> barSpans;
  std::vector<std::string> barColor;
  for (int nu = 1; nu <= p.N; ++nu) {
    barX.push_back(detail::svg_x(p, -p.L - nu));
    barSpans.push_back({{TOP, yBot}});
    barColor.push_back("#c22");
  }
  for (int lam = 1; lam <= p.L; ++lam) {
    barX.push_back(detail::svg_x(p, -lam));
    barSpans.push_back({{TOP, yBot}});
    barColor.push_back("#24c");
  }
  auto bar_front = [&](double x, double y) {
    for (size_t i = 0; i < barX.size(); ++i)
      if (std::abs(barX[i] - x) < 0.5) detail::svg_cut(barSpans[i], y, GAP);
  };

  std::vector<int> at(static_cast<size_t>(p.n));
  for (int j = 0; j < p.n; ++j) at[static_cast<size_t>(j)] = j + 1;
  auto pos_of = [&](int strand) {
    for (int q = 0; q < p.n; ++q)
      if (at[static_cast<size_t>(q)] == strand) return q + 1;
    return 1;
  };
  // Pending vertical run start per position; flushed when the strand moves.
  std::vector<double> since(static_cast<size_t>(p.n), TOP);
  auto flush = [&](int pos, double y) {
    double x = detail::svg_x(p, pos);
    if (y > since[static_cast<size_t>(pos) - 1] + 0.25)
      strands.push_back({x, since[static_cast<size_t>(pos) - 1], x, y});
  };

  // Emits one excursion leg between (xa,ya) and (xb,yb); bars passed in
  // front are cut, a crossing behind `behindX` (0 = none) cuts the leg.
  auto leg = [&](double xa, double ya, double xb, double yb, double behindX) {
    double lo = std::min(xa, xb), hi = std::max(xa, xb);
    std::vector<std::pair<double, double>> spans{{0.0, 1.0}};
    for (size_t i = 0; i < barX.size(); ++i) {
      if (barX[i] <= lo + 0.5 || barX[i] >= hi - 0.5) continue;
      double t = (barX[i] - xa) / (xb - xa);
      if (behindX > 0.5 && std::abs(barX[i] - behindX) < 0.5)
        detail::svg_cut(spans, t, GAP / (hi - lo));
      else
        bar_front(barX[i], ya + t * (yb - ya));
    }
    for (auto [a, b] : spans)
      strands.push_back({xa + a * (xb - xa), ya + a * (yb - ya),
                         xa + b * (xb - xa), ya + b * (yb - ya)});
  };

  size_t q = 0;
  for (size_t slot = 0; slot < slots; ++slot) {
    double y0 = TOP + RH * static_cast<double>(slot), y1 = y0 + RH;
    if (q >= d.events.size()) break;
    const DiagramEvent& e = d.events[q];
    if (e.kind == EventKind::StrandCross) {
      double xL = detail::svg_x(p, e.pos), xR = detail::svg_x(p, e.pos + 1);
      flush(e.pos, y0);
      flush(e.pos + 1, y0);
      double mx = (xL + xR) / 2.0, my = y0 + RH / 2.0;
      if (e.sign > 0) {
        strands.push_back({xL, y0, xR, y1});
        strands.push_back({xR, y0, mx + GAP, my - GAP});
        strands.push_back({mx - GAP, my + GAP, xL, y1});
      } else {
        strands.push_back({xR, y0, xL, y1});
        strands.push_back({xL, y0, mx - GAP, my - GAP});
        strands.push_back({mx + GAP, my + GAP, xR, y1});
      }
      std::swap(at[static_cast<size_t>(e.pos) - 1], at[static_cast<size_t>(e.pos)]);
      since[static_cast<size_t>(e.pos) - 1] = y1;
      since[static_cast<size_t>(e.pos)] = y1;
      ++q;
      continue;
    }
    if (e.kind == EventKind::GammaLeap) {
      int pos = pos_of(e.strand);
      double c = detail::svg_x(p, pos), b = detail::svg_x(p, -p.L - e.nu);
      double park = b - 9.0;
      flush(pos, y0);
      leg(c, y0, park, y0 + RH * 0.35, e.exp > 0 ? 0.0 : b);
      strands.push_back({park, y0 + RH * 0.35, park, y0 + RH * 0.65});
      leg(park, y0 + RH * 0.65, c, y1, e.exp > 0 ? b : 0.0);
      since[static_cast<size_t>(pos) - 1] = y1;
      ++q;
      continue;
    }
    int pos = pos_of(e.strand);
    double c = detail::svg_x(p, pos), b = detail::svg_x(p, -e.lam);
    double park = b - 9.0;
    bool paired = q + 1 < d.events.size() && d.events[q + 1].kind == EventKind::PunctureCross &&
                  d.events[q + 1].strand == e.strand && d.events[q + 1].lam == e.lam &&
                  d.events[q + 1].over != e.over;
    flush(pos, y0);
    if (paired) {
      leg(c, y0, park, y0 + RH * 0.5, e.over ? 0.0 : b);
      strands.push_back({park, y0 + RH * 0.5, park, y1 + RH * 0.5});
      leg(park, y1 + RH * 0.5, c, y1 + RH, d.events[q + 1].over ? 0.0 : b);
      since[static_cast<size_t>(pos) - 1] = y1 + RH;
      q += 2;
      ++slot;
    } else {
      leg(c, y0, park, y0 + RH * 0.35, e.over ? 0.0 : b);
      strands.push_back({park, y0 + RH * 0.35, park, y0 + RH * 0.65});
      leg(park, y0 + RH * 0.65, c, y1, e.over ? 0.0 : b);
      since[static_cast<size_t>(pos) - 1] = y1;
      ++q;
    }
  }
  for (int pos = 1; pos <= p.n; ++pos) flush(pos, yBot);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::svg_num(width)
     << "\" height=\"" << detail::svg_num(height) << "\" viewBox=\"0 0 "
     << detail::svg_num(width) << " " << detail::svg_num(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (size_t i = 0; i < barX.size(); ++i) {
    for (auto [a, b] : barSpans[i])
      os << "<line x1=\"" << detail::svg_num(barX[i]) << "\" y1=\"" << detail::svg_num(a)
         << "\" x2=\"" << detail::svg_num(barX[i]) << "\" y2=\"" << detail::svg_num(b)
         << "\" stroke=\"" << barColor[i] << "\" stroke-width=\"2\"/>\n";
    double x = barX[i];
    if (barColor[i] == "#c22")
      os << "<polygon points=\"" << detail::svg_num(x - 5) << "," << detail::svg_num(TOP) << " "
         << detail::svg_num(x + 5) << "," << detail::svg_num(TOP) << " " << detail::svg_num(x)
         << "," << detail::svg_num(TOP - 9) << "\" fill=\"#c22\"/>\n";
    else
      os << "<polygon points=\"" << detail::svg_num(x - 4) << "," << detail::svg_num(TOP - 4)
         << " " << detail::svg_num(x) << "," << detail::svg_num(TOP - 8) << " "
         << detail::svg_num(x + 4) << "," << detail::svg_num(TOP - 4) << " "
         << detail::svg_num(x) << "," << detail::svg_num(TOP) << "\" fill=\"#24c\"/>\n";
  }
  for (const detail::SvgSeg& s : strands)
    os << "<line x1=\"" << detail::svg_num(s.x1) << "\" y1=\"" << detail::svg_num(s.y1)
       << "\" x2=\"" << detail::svg_num(s.x2) << "\" y2=\"" << detail::svg_num(s.y2)
       << "\" stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\"/>\n";
  for (int j = 1; j <= p.n; ++j)
    os << "<text x=\"" << detail::svg_num(detail::svg_x(p, j)) << "\" y=\""
       << detail::svg_num(height - 4) << "\" font-size=\"10\" text-anchor=\"middle\">" << j
       << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

inline std::string render(const Diagram& d, RenderFormat fmt) {
  return fmt == RenderFormat::Svg ? render_svg(d) : render_ascii(d);
}

}  // namespace orbibraid
