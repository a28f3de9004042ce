#include "torslice/group.hpp"

#include <algorithm>
#include <cstdlib>

namespace torslice {

namespace {

// Appends one syllable, merging with the last one when the kinds agree. Applied
// letter by letter this keeps any sequence in alternating normal form.
void push(SyllableWord& h, Syllable s) {
  if (s.is_zero()) return;
  if (!h.empty() && h.back().kind == s.kind) {
    Syllable& last = h.back();
    last.x += s.x;
    last.y += s.y;
    if (last.is_zero()) h.pop_back();
    return;
  }
  h.push_back(s);
}

void append(SyllableWord& h, const SyllableWord& tail) {
  for (const auto& s : tail) push(h, s);
}

SyllableWord inverse_h(const SyllableWord& h) {
  SyllableWord out;
  out.reserve(h.size());
  for (auto it = h.rbegin(); it != h.rend(); ++it) out.push_back(it->inverse());
  return out;
}

void push_theta(SyllableWord& out, const Syllable& s) {
  if (s.kind == Syllable::Kind::ST) {
    // theta(s^x t^y) = b^-1 s^x t^y b
    push(out, Syllable::bb(-1));
    push(out, s);
    push(out, Syllable::bb(1));
    return;
  }
  // theta(b) = b^-1 t^-1, theta(b^-1) = t b
  const std::int64_t m = s.x;
  for (std::int64_t i = 0; i < std::llabs(m); ++i) {
    if (m > 0) {
      push(out, Syllable::bb(-1));
      push(out, Syllable::st(0, -1));
    } else {
      push(out, Syllable::st(0, 1));
      push(out, Syllable::bb(1));
    }
  }
}

SyllableWord theta_h(const SyllableWord& h) {
  SyllableWord out;
  for (const auto& s : h) push_theta(out, s);
  return out;
}

}  // namespace

std::string format_syllables(const SyllableWord& h) {
  std::string out;
  for (const auto& s : h) {
    if (!out.empty()) out += '.';
    if (s.kind == Syllable::Kind::ST)
      out += "S(" + std::to_string(s.x) + "," + std::to_string(s.y) + ")";
    else
      out += "B(" + std::to_string(s.x) + ")";
  }
  return out;
}

std::string format_element(const ModelElement& x) {
  if (x.is_identity()) return "1";
  std::string out = format_syllables(x.h);
  if (x.a_flag) out += out.empty() ? "a" : " a";
  return out;
}

ModelElement generator_image(Letter l) {
  ModelElement g;
  switch (l.symbol) {
    case Symbol::a: return {{}, true};
    case Symbol::b: g.h = {Syllable::bb(1)}; break;
    case Symbol::bp: g.h = {Syllable::st(0, 1), Syllable::bb(1)}; break;
    case Symbol::B: g.h = {Syllable::st(-1, 0), Syllable::bb(1)}; break;
    case Symbol::Bp: g.h = {Syllable::st(1, 1), Syllable::bb(1)}; break;
  }
  if (l.exponent < 0) g.h = inverse_h(g.h);
  return g;
}

ModelElement multiply(const ModelElement& x, const ModelElement& y) {
  // (h1 a^e1)(h2 a^e2) = h1 theta^e1(h2) a^(e1+e2)
  ModelElement r{x.h, x.a_flag != y.a_flag};
  if (x.a_flag)
    for (const auto& s : y.h) push_theta(r.h, s);
  else
    append(r.h, y.h);
  return r;
}

ModelElement invert(const ModelElement& x) {
  // (h a^e)^-1 = a^e h^-1 = theta^e(h^-1) a^e
  SyllableWord inv = inverse_h(x.h);
  return {x.a_flag ? theta_h(inv) : inv, x.a_flag};
}

ModelElement theta(const ModelElement& x) { return {theta_h(x.h), x.a_flag}; }

ModelElement reduce_word(const FreeWord& w) {
  ModelElement acc;
  for (const auto& l : w) {
    if (l.symbol == Symbol::a) {
      acc.a_flag = !acc.a_flag;
      continue;
    }
    const ModelElement g = generator_image(l);
    if (acc.a_flag)
      for (const auto& s : g.h) push_theta(acc.h, s);
    else
      append(acc.h, g.h);
  }
  return acc;
}

FreeWord to_word(const ModelElement& x) {
  FreeWord w;
  auto repeat = [&w](FreeWord piece, std::int64_t times) {
    if (times < 0) {
      piece = inverse(piece);
      times = -times;
    }
    for (std::int64_t i = 0; i < times; ++i) w.insert(w.end(), piece.begin(), piece.end());
  };
  const FreeWord s = {{Symbol::b, +1}, {Symbol::B, -1}};
  const FreeWord t = {{Symbol::bp, +1}, {Symbol::b, -1}};
  for (const auto& syl : x.h) {
    if (syl.kind == Syllable::Kind::ST) {
      repeat(s, syl.x);
      repeat(t, syl.y);
    } else {
      repeat({{Symbol::b, +1}}, syl.x);
    }
  }
  if (x.a_flag) w.push_back({Symbol::a, +1});
  return w;
}

bool equal(const FreeWord& w1, const FreeWord& w2) { return reduce_word(w1) == reduce_word(w2); }

bool is_trivial(const FreeWord& w) { return reduce_word(w).is_identity(); }

const std::array<FreeWord, 5>& relators() {
  static const std::array<FreeWord, 5> table = {
      parse_word("a a"),
      parse_word("a b a b'"),
      parse_word("a B a B'"),
      parse_word("b B^-1 b' B'^-1"),
      parse_word("b^-1 B b'^-1 B'"),
  };
  return table;
}

const std::array<Relation, 5>& relations() {
  static const std::array<Relation, 5> table = {{
      {"r1", parse_word("a a"), {}},
      {"r2", parse_word("a b"), parse_word("b'^-1 a")},
      {"r3", parse_word("a B"), parse_word("B'^-1 a")},
      {"r4", parse_word("b B^-1"), parse_word("B' b'^-1")},
      {"r5", parse_word("b^-1 B"), parse_word("B'^-1 b'")},
  }};
  return table;
}

SyllableWord cyclic_reduce(SyllableWord h) {
  while (h.size() >= 2 && h.front().kind == h.back().kind) {
    Syllable merged = h.front();
    merged.x += h.back().x;
    merged.y += h.back().y;
    h.pop_back();
    if (merged.is_zero())
      h.erase(h.begin());
    else
      h.front() = merged;
  }
  return h;
}

CanonicalClass canon_class(const ModelElement& x) {
  if (x.a_flag) throw UnsupportedAFlag();
  CanonicalClass best;
  bool first = true;
  for (const SyllableWord& cyc : {cyclic_reduce(x.h), cyclic_reduce(theta_h(x.h))}) {
    SyllableWord rot = cyc;
    for (std::size_t i = 0; i < std::max<std::size_t>(cyc.size(), 1); ++i) {
      if (first || rot < best.cycle) {
        best.cycle = rot;
        first = false;
      }
      if (!rot.empty()) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
  }
  return best;
}

InvariantValue invariant_of_word(const FreeWord& w) {
  CanonicalClass c1 = canon_class(reduce_word(w));
  CanonicalClass c2 = canon_class(reduce_word(psi(w)));
  if (c2 < c1) std::swap(c1, c2);
  return {std::move(c1), std::move(c2)};
}

InvariantValue invariant(const GaussDiagram& d) { return invariant_of_word(build_word(d)); }

InvariantValue invariant_at(const GaussDiagram& d, std::size_t ref) {
  return invariant_of_word(build_word_at(d, ref));
}

std::optional<Z2Coords> z2_coords(const CanonicalClass& c) {
  if (c.empty()) return Z2Coords{0, 0, std::pair<std::int64_t, std::int64_t>{0, 0}};
  if (c.cycle.size() != 1 || c.cycle.front().kind != Syllable::Kind::ST) return std::nullopt;
  const auto& s = c.cycle.front();
  Z2Coords z{s.x, s.y, std::nullopt};
  if (s.x % 2 == 0) z.basis = std::pair{s.x / 2, s.y - s.x / 2};
  return z;
}

std::string_view to_string(Verdict v) {
  return v == Verdict::NotSlice ? "NotSlice" : "Inconclusive";
}

Verdict verdict(const InvariantValue& v) {
  return v.trivial() ? Verdict::Inconclusive : Verdict::NotSlice;
}

}  // namespace torslice
