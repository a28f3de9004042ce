#include "torslice/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>

#include "torslice/group.hpp"

namespace torslice {

namespace {

bool is_pair(Letter x, Letter y) {
  if (x.symbol == Symbol::a && y.symbol == Symbol::a)
    return (x.exponent == 1 && y.exponent == 1) || x.exponent != y.exponent;
  return y == x.inverse();
}

bool matches(const FreeWord& w, std::size_t pos, const FreeWord& pattern) {
  if (pos + pattern.size() > w.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (!(w[pos + i] == pattern[i])) return false;
  return true;
}

}  // namespace

FreeWord apply_step(const FreeWord& w, const RewriteStep& step) {
  FreeWord out = w;
  auto at = [&](std::size_t k) { return out.begin() + static_cast<std::ptrdiff_t>(k); };
  switch (step.kind) {
    case RewriteStep::Kind::InsertPair:
      if (step.position > w.size()) throw InvalidRewrite("insertion past end: " + format_step(step));
      if (!is_pair(step.first, step.second)) throw InvalidRewrite("not a cancelling pair: " + format_step(step));
      out.insert(at(step.position), {step.first, step.second});
      return out;
    case RewriteStep::Kind::DeletePair:
      if (!is_pair(step.first, step.second) || !matches(w, step.position, {step.first, step.second}))
        throw InvalidRewrite("pair not found: " + format_step(step));
      out.erase(at(step.position), at(step.position + 2));
      return out;
    case RewriteStep::Kind::Relation: {
      if (step.relation < 1 || step.relation > 4) throw InvalidRewrite("unknown relation");
      const Relation& rel = relations()[static_cast<std::size_t>(step.relation)];
      const FreeWord& from = step.forward ? rel.lhs : rel.rhs;
      const FreeWord& to = step.forward ? rel.rhs : rel.lhs;
      if (!matches(w, step.position, from)) throw InvalidRewrite("relation side not found: " + format_step(step));
      out.erase(at(step.position), at(step.position + from.size()));
      out.insert(at(step.position), to.begin(), to.end());
      return out;
    }
  }
  return out;
}

FreeWord replay(FreeWord w, const std::vector<RewriteStep>& trace) {
  for (const auto& s : trace) w = apply_step(w, s);
  return w;
}

RewriteStep reverse_step(const RewriteStep& step) {
  RewriteStep r = step;
  switch (step.kind) {
    case RewriteStep::Kind::InsertPair: r.kind = RewriteStep::Kind::DeletePair; break;
    case RewriteStep::Kind::DeletePair: r.kind = RewriteStep::Kind::InsertPair; break;
    case RewriteStep::Kind::Relation: r.forward = !step.forward; break;
  }
  return r;
}

std::string format_step(const RewriteStep& step) {
  const std::string pos = "@" + std::to_string(step.position + 1);
  if (step.kind == RewriteStep::Kind::Relation) {
    const Relation& rel = relations()[static_cast<std::size_t>(step.relation)];
    const FreeWord& from = step.forward ? rel.lhs : rel.rhs;
    const FreeWord& to = step.forward ? rel.rhs : rel.lhs;
    return std::string(rel.name) + "[" + format_word(from) + " -> " + format_word(to) + "]" + pos +
           (step.forward ? "(fwd)" : "(bwd)");
  }
  bool aa = step.first.symbol == Symbol::a && step.first == step.second;
  return std::string(aa ? "r1" : "free") + "[" + format_word({step.first, step.second}) + "]" + pos +
         (step.kind == RewriteStep::Kind::InsertPair ? "(ins)" : "(del)");
}

std::string format_trace(const std::vector<RewriteStep>& trace) {
  std::string out;
  for (const auto& s : trace) {
    if (!out.empty()) out += ", ";
    out += format_step(s);
  }
  return out;
}

namespace {

// ---- search representation: one byte per letter, a^-1 never occurs ----

using Code = std::uint8_t;
using CodeWord = std::string;

Code code_of(Letter l) {
  if (l.symbol == Symbol::a) return 0;
  return static_cast<Code>(2 * static_cast<int>(l.symbol) - (l.exponent > 0 ? 1 : 0));
}

Letter letter_of(Code c) {
  if (c == 0) return {Symbol::a, 1};
  return {static_cast<Symbol>((c + 1) / 2), c % 2 == 1 ? 1 : -1};
}

Code inv(Code c) { return c == 0 ? 0 : (c % 2 == 1 ? c + 1 : c - 1); }

CodeWord encode(const FreeWord& w) {
  CodeWord s;
  for (auto l : w) s.push_back(static_cast<char>(code_of(l)));
  return s;
}

FreeWord decode(const CodeWord& s) {
  FreeWord w;
  for (char c : s) w.push_back(letter_of(static_cast<Code>(c)));
  return w;
}

void reduce_codes(CodeWord& s) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (top > 0 && static_cast<Code>(s[top - 1]) == inv(static_cast<Code>(s[i])))
      --top;
    else
      s[top++] = s[i];
  }
  s.resize(top);
}

// Free reduction on letters, recording every deletion.
FreeWord reduce_letters(const FreeWord& w, std::vector<RewriteStep>& steps) {
  FreeWord stack;
  for (auto l : w) {
    if (!stack.empty() && is_pair(stack.back(), l)) {
      RewriteStep s;
      s.kind = RewriteStep::Kind::DeletePair;
      s.position = stack.size() - 1;
      s.first = stack.back();
      s.second = l;
      steps.push_back(s);
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

// Brings a word into the search space: a^-1 becomes a, then free reduction.
FreeWord normalize(const FreeWord& w, std::vector<RewriteStep>& steps) {
  FreeWord cur = w;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (cur[i].symbol != Symbol::a || cur[i].exponent > 0) continue;
    RewriteStep ins{RewriteStep::Kind::InsertPair, i + 1, {Symbol::a, 1}, {Symbol::a, 1}, 0, true};
    RewriteStep del{RewriteStep::Kind::DeletePair, i, {Symbol::a, -1}, {Symbol::a, 1}, 0, true};
    cur = apply_step(apply_step(cur, ins), del);
    steps.push_back(ins);
    steps.push_back(del);
  }
  return reduce_letters(cur, steps);
}

// A rewrite rule "pattern -> target", both of length two. Plain rules are the
// relations r2..r5 read in either direction; inverted rules are the same
// relations with both sides inverted.
struct Rule {
  std::array<Code, 2> pattern;
  std::array<Code, 2> target;
  int relation;
  bool forward;   // direction of the underlying relation step
  bool inverted;
};

const std::vector<Rule>& rules() {
  static const std::vector<Rule> table = [] {
    std::vector<Rule> t;
    for (int r = 1; r <= 4; ++r) {
      const Relation& rel = relations()[static_cast<std::size_t>(r)];
      for (bool forward : {true, false}) {
        const FreeWord& p = forward ? rel.lhs : rel.rhs;
        const FreeWord& q = forward ? rel.rhs : rel.lhs;
        std::array<Code, 2> pc = {code_of(p[0]), code_of(p[1])};
        std::array<Code, 2> qc = {code_of(q[0]), code_of(q[1])};
        t.push_back({pc, qc, r, forward, false});
        t.push_back({{inv(pc[1]), inv(pc[0])}, {inv(qc[1]), inv(qc[0])}, r, forward, true});
      }
    }
    return t;
  }();
  return table;
}

// How a rule is brought to bear on a word: the whole pattern is present
// (Full), only its first or second letter is (Left / Right) and the rest is
// created by a pair insertion, or nothing is and both letters are inserted
// at a gap (Gap).
enum class Fit : std::uint8_t { Full, Left, Right, Gap };

struct Edge {
  std::uint8_t rule = 0;
  Fit fit = Fit::Full;
  std::uint16_t pos = 0;
};

CodeWord successor(const CodeWord& w, const Rule& r, Fit fit, std::size_t p) {
  CodeWord out;
  out.reserve(w.size() + 4);
  out.append(w, 0, p);
  out.push_back(static_cast<char>(r.target[0]));
  out.push_back(static_cast<char>(r.target[1]));
  switch (fit) {
    case Fit::Full: out.append(w, p + 2, CodeWord::npos); break;
    case Fit::Left:
      out.push_back(static_cast<char>(inv(r.pattern[1])));
      out.append(w, p + 1, CodeWord::npos);
      break;
    case Fit::Right:
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(p), static_cast<char>(inv(r.pattern[0])));
      out.append(w, p + 1, CodeWord::npos);
      break;
    case Fit::Gap:
      out.push_back(static_cast<char>(inv(r.pattern[1])));
      out.push_back(static_cast<char>(inv(r.pattern[0])));
      out.append(w, p, CodeWord::npos);
      break;
  }
  reduce_codes(out);
  return out;
}

template <class Visit>
void for_each_successor(const CodeWord& w, Visit&& visit) {
  const auto& rs = rules();
  for (std::size_t ri = 0; ri < rs.size(); ++ri) {
    const Rule& r = rs[ri];
    for (std::size_t p = 0; p <= w.size(); ++p) {
      auto emit = [&](Fit fit) {
        Edge e{static_cast<std::uint8_t>(ri), fit, static_cast<std::uint16_t>(p)};
        return visit(successor(w, r, fit, p), e);
      };
      if (p < w.size()) {
        Code c = static_cast<Code>(w[p]);
        bool next = p + 1 < w.size() && static_cast<Code>(w[p + 1]) == r.pattern[1];
        if (c == r.pattern[0] && next && emit(Fit::Full)) return;
        if (c == r.pattern[0] && !next && emit(Fit::Left)) return;
        if (c == r.pattern[1] && emit(Fit::Right)) return;
      }
      if (emit(Fit::Gap)) return;
    }
  }
}

RewriteStep pair_step(RewriteStep::Kind kind, std::size_t pos, Code first) {
  return {kind, pos, letter_of(first), letter_of(inv(first)), 0, true};
}

// Elementary steps realising one edge, applied to `w` in place.
void expand_edge(FreeWord& w, const Edge& e, std::vector<RewriteStep>& steps) {
  const Rule& r = rules()[e.rule];
  auto run = [&](const RewriteStep& s) {
    w = apply_step(w, s);
    steps.push_back(s);
  };
  using K = RewriteStep::Kind;
  std::size_t p = e.pos;
  switch (e.fit) {
    case Fit::Full: break;
    case Fit::Left: run(pair_step(K::InsertPair, p + 1, r.pattern[1])); break;
    case Fit::Right:
      run(pair_step(K::InsertPair, p, inv(r.pattern[0])));
      ++p;
      break;
    case Fit::Gap:
      run(pair_step(K::InsertPair, p, r.pattern[0]));
      run(pair_step(K::InsertPair, p + 1, r.pattern[1]));
      break;
  }
  if (!r.inverted) {
    run({K::Relation, p, {}, {}, r.relation, r.forward});
  } else {
    // y^-1 x^-1 -> q2^-1 q1^-1 via x y = q1 q2:
    // insert q1 q1^-1, insert q2 q2^-1 inside it, rewrite q1 q2 as x y,
    // then cancel x^-1 x and y^-1 y.
    Code q1 = inv(r.target[1]), q2 = inv(r.target[0]);
    run(pair_step(K::InsertPair, p + 2, q1));
    run(pair_step(K::InsertPair, p + 3, q2));
    run({K::Relation, p + 2, {}, {}, r.relation, !r.forward});
    run(pair_step(K::DeletePair, p + 1, r.pattern[1]));
    run(pair_step(K::DeletePair, p, r.pattern[0]));
  }
  w = reduce_letters(w, steps);
}


// Bidirectional breadth-first search. `Succ(word, visit)` calls
// visit(next, edge) for every successor and stops when visit returns true;
// `Expand(w, edge, steps)` replays one edge as elementary steps.
template <class EdgeT>
struct Side {
  struct Node {
    CodeWord word;
    std::uint32_t parent;
    EdgeT edge;
  };
  std::vector<Node> nodes;
  std::unordered_map<CodeWord, std::uint32_t> index;
  std::size_t layer_begin = 0;
  std::size_t layer_end = 0;

  explicit Side(const CodeWord& root) {
    nodes.push_back({root, 0, {}});
    index.emplace(root, 0);
    layer_end = 1;
  }
  std::size_t frontier() const { return layer_end - layer_begin; }

  template <class Expand>
  std::vector<RewriteStep> path_steps(std::uint32_t i, Expand& expand) const {
    std::vector<std::uint32_t> chain;
    for (std::uint32_t k = i; k != 0; k = nodes[k].parent) chain.push_back(k);
    std::vector<RewriteStep> steps;
    FreeWord w = decode(nodes[0].word);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      expand(w, nodes[*it].edge, steps);
      if (encode(w) != nodes[*it].word) throw std::logic_error("oracle: edge expansion diverged");
    }
    return steps;
  }
};

template <class EdgeT, class Succ, class Expand>
std::optional<std::vector<RewriteStep>> bidirectional(const FreeWord& n1, const FreeWord& n2,
                                                      const OracleLimits& limits, std::size_t& expanded,
                                                      Succ succ, Expand expand) {
  if (n1 == n2) return std::vector<RewriteStep>{};
  std::array<Side<EdgeT>, 2> sides = {Side<EdgeT>(encode(n1)), Side<EdgeT>(encode(n2))};
  while (expanded < limits.budget) {
    int s = sides[0].frontier() <= sides[1].frontier() ? 0 : 1;
    if (sides[s].frontier() == 0) s = 1 - s;
    if (sides[s].frontier() == 0) break;
    auto& me = sides[s];
    auto& other = sides[1 - s];

    std::size_t end = me.layer_end;
    for (std::size_t i = me.layer_begin; i < end && expanded < limits.budget; ++i) {
      ++expanded;
      const CodeWord word = me.nodes[i].word;
      std::optional<std::pair<std::uint32_t, std::uint32_t>> meet;  // (my node, other node)
      succ(word, [&](CodeWord next, EdgeT e) {
        if (next.size() > limits.max_len) return false;
        if (me.index.count(next)) return false;
        if (auto it = other.index.find(next); it != other.index.end()) {
          me.nodes.push_back({std::move(next), static_cast<std::uint32_t>(i), e});
          meet = std::pair{static_cast<std::uint32_t>(me.nodes.size() - 1), it->second};
          return true;
        }
        if (me.nodes.size() + other.nodes.size() < limits.budget + 2) {
          me.index.emplace(next, static_cast<std::uint32_t>(me.nodes.size()));
          me.nodes.push_back({std::move(next), static_cast<std::uint32_t>(i), e});
        }
        return false;
      });
      if (meet) {
        auto from_mine = me.path_steps(meet->first, expand);
        auto from_other = other.path_steps(meet->second, expand);
        // orient as n1 -> meeting word -> n2
        std::vector<RewriteStep>& to_meet = s == 0 ? from_mine : from_other;
        std::vector<RewriteStep>& from_end = s == 0 ? from_other : from_mine;
        std::vector<RewriteStep> middle = to_meet;
        for (auto it = from_end.rbegin(); it != from_end.rend(); ++it) middle.push_back(reverse_step(*it));
        return middle;
      }
    }
    me.layer_begin = end;
    me.layer_end = me.nodes.size();
  }
  return std::nullopt;
}

// Search over the full presentation, one relation application (with the
// pair insertions it needs) per edge.
std::optional<std::vector<RewriteStep>> elementary_search(const FreeWord& n1, const FreeWord& n2,
                                                          const OracleLimits& limits, std::size_t& expanded) {
  return bidirectional<Edge>(
      n1, n2, limits, expanded, [](const CodeWord& w, auto&& visit) { for_each_successor(w, visit); },
      [](FreeWord& w, const Edge& e, std::vector<RewriteStep>& steps) { expand_edge(w, e, steps); });
}

// Full derivation w1 -> w2 through the elementary search, or nullopt.
std::optional<std::vector<RewriteStep>> elementary_proof(const FreeWord& w1, const FreeWord& w2,
                                                         const OracleLimits& limits, std::size_t& expanded) {
  std::vector<RewriteStep> head, tail;
  const FreeWord n1 = normalize(w1, head);
  const FreeWord n2 = normalize(w2, tail);
  auto middle = elementary_search(n1, n2, limits, expanded);
  if (!middle) return std::nullopt;
  head.insert(head.end(), middle->begin(), middle->end());
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) head.push_back(reverse_step(*it));
  return head;
}

// ---- lemmas ----
//
// A lemma is a local rewrite `from -> to` together with a derivation of it
// from the presentation, found once by the elementary search. Applying a
// lemma inside a word replays the derivation shifted to the right place.

struct Lemma {
  CodeWord from;
  CodeWord to;
  std::vector<RewriteStep> steps;
};

std::vector<RewriteStep> shifted(const std::vector<RewriteStep>& steps, std::size_t offset) {
  std::vector<RewriteStep> out = steps;
  for (auto& s : out) s.position += offset;
  return out;
}

Lemma derive(const FreeWord& from, const FreeWord& to) {
  OracleLimits limits{12, 200000};
  std::size_t expanded = 0;
  auto proof = elementary_proof(from, to, limits, expanded);
  if (!proof || !(replay(from, *proof) == to))
    throw std::logic_error("oracle: cannot derive lemma " + format_word(from) + " = " + format_word(to));
  return {encode(from), encode(to), std::move(*proof)};
}

// The letter y with a x a = y.
Code bar(Code c) {
  Letter l = letter_of(c);
  switch (l.symbol) {
    case Symbol::b: return code_of({Symbol::bp, -l.exponent});
    case Symbol::bp: return code_of({Symbol::b, -l.exponent});
    case Symbol::B: return code_of({Symbol::Bp, -l.exponent});
    case Symbol::Bp: return code_of({Symbol::B, -l.exponent});
    case Symbol::a: break;
  }
  return c;
}

struct LemmaTables {
  std::array<Lemma, 9> swap;   // "a x -> bar(x) a", indexed by the code of x
  std::vector<Lemma> local;    // relator pieces of the a-free subgroup
};

// The words with an even number of a form a subgroup of index two generated
// by b, b', B, B'. Its relators are r4, r5 and their conjugates by a. Every
// cyclic rotation of these relators and of their inverses, cut into a prefix
// p and the rest q, gives a lemma p -> q^-1.
const LemmaTables& lemmas() {
  static const LemmaTables tables = [] {
    LemmaTables t;
    for (Code c = 1; c <= 8; ++c)
      t.swap[c] = derive(decode(CodeWord{char(0), static_cast<char>(c)}),
                         decode(CodeWord{static_cast<char>(bar(c)), char(0)}));

    std::vector<CodeWord> cycles;
    for (std::size_t r = 3; r <= 4; ++r) {
      CodeWord base = encode(relators()[r]);
      CodeWord conj;
      for (char c : base) conj.push_back(static_cast<char>(bar(static_cast<Code>(c))));
      for (const CodeWord& w : {base, conj}) {
        CodeWord winv;
        for (auto it = w.rbegin(); it != w.rend(); ++it) winv.push_back(static_cast<char>(inv(static_cast<Code>(*it))));
        for (const CodeWord& v : {w, winv})
          for (std::size_t k = 0; k < v.size(); ++k) cycles.push_back(v.substr(k) + v.substr(0, k));
      }
    }
    std::sort(cycles.begin(), cycles.end());
    cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());

    std::vector<std::pair<CodeWord, CodeWord>> seen;
    for (const CodeWord& cyc : cycles) {
      for (std::size_t k = 1; k < cyc.size(); ++k) {
        CodeWord from = cyc.substr(0, k), to;
        for (std::size_t i = cyc.size(); i > k; --i) to.push_back(static_cast<char>(inv(static_cast<Code>(cyc[i - 1]))));
        if (std::find(seen.begin(), seen.end(), std::pair{from, to}) != seen.end()) continue;
        seen.emplace_back(from, to);
        t.local.push_back(derive(decode(from), decode(to)));
      }
    }
    return t;
  }();
  return tables;
}

void run_lemma(FreeWord& w, const Lemma& l, std::size_t pos, std::vector<RewriteStep>& steps) {
  for (const auto& s : shifted(l.steps, pos)) {
    w = apply_step(w, s);
    steps.push_back(s);
  }
}

// Moves every a to the right end (a x -> bar(x) a, a a -> 1), leaving u a^e
// with u free of a.
FreeWord push_a_right(FreeWord w, std::vector<RewriteStep>& steps) {
  const auto& t = lemmas();
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i].symbol != Symbol::a) ++i;
    if (i + 1 >= w.size()) return w;
    if (w[i + 1].symbol == Symbol::a) {
      RewriteStep del{RewriteStep::Kind::DeletePair, i, w[i], w[i + 1], 0, true};
      w = apply_step(w, del);
      steps.push_back(del);
    } else {
      run_lemma(w, t.swap[code_of(w[i + 1])], i, steps);
    }
    w = reduce_letters(w, steps);
  }
}

struct LemmaEdge {
  std::uint16_t lemma = 0;
  std::uint16_t pos = 0;
};

// Search inside the a-free subgroup, one lemma application per edge.
std::optional<std::vector<RewriteStep>> subgroup_search(const FreeWord& u1, const FreeWord& u2,
                                                        const OracleLimits& limits, std::size_t& expanded) {
  const auto& local = lemmas().local;
  auto succ = [&](const CodeWord& w, auto&& visit) {
    for (std::size_t li = 0; li < local.size(); ++li) {
      const Lemma& l = local[li];
      for (std::size_t p = 0; p + l.from.size() <= w.size(); ++p) {
        if (w.compare(p, l.from.size(), l.from) != 0) continue;
        CodeWord out = w.substr(0, p) + l.to + w.substr(p + l.from.size());
        reduce_codes(out);
        if (visit(std::move(out), LemmaEdge{static_cast<std::uint16_t>(li), static_cast<std::uint16_t>(p)})) return;
      }
    }
  };
  auto expand = [&](FreeWord& w, const LemmaEdge& e, std::vector<RewriteStep>& steps) {
    run_lemma(w, local[e.lemma], e.pos, steps);
    w = reduce_letters(w, steps);
  };
  return bidirectional<LemmaEdge>(u1, u2, limits, expanded, succ, expand);
}

std::array<long, 3> abelian_image(const FreeWord& w) {
  std::array<long, 3> img = {0, 0, 0};
  for (auto l : w) {
    switch (l.symbol) {
      case Symbol::a: img[0] ^= 1; break;
      case Symbol::b: img[1] += l.exponent; break;
      case Symbol::bp: img[1] -= l.exponent; break;
      case Symbol::B: img[2] += l.exponent; break;
      case Symbol::Bp: img[2] -= l.exponent; break;
    }
  }
  return img;
}

using Perm = std::array<std::uint8_t, 8>;

struct Quotient {
  std::size_t n = 0;
  std::array<Perm, 5> image;  // indexed by Symbol
};

// x then y
Perm compose(const Perm& x, const Perm& y, std::size_t n) {
  Perm r{};
  for (std::size_t i = 0; i < n; ++i) r[i] = y[x[i]];
  return r;
}

Perm invert_perm(const Perm& x, std::size_t n) {
  Perm r{};
  for (std::size_t i = 0; i < n; ++i) r[x[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Perm identity_perm() {
  Perm r{};
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint8_t>(i);
  return r;
}

Perm evaluate(const Quotient& q, const FreeWord& w) {
  Perm r = identity_perm();
  for (auto l : w) {
    const Perm& g = q.image[static_cast<std::size_t>(l.symbol)];
    r = compose(r, l.exponent > 0 ? g : invert_perm(g, q.n), q.n);
  }
  return r;
}

// a is an involution, b and B are arbitrary, b' = a b^-1 a and B' = a B^-1 a
// make r1..r3 hold; candidates are kept when r4 and r5 hold too and the image
// is not abelian.
const std::vector<Quotient>& quotients() {
  static const std::vector<Quotient> table = [] {
    std::vector<Quotient> out;
    std::mt19937_64 rng(20240917);
    for (std::size_t n = 5; n <= 8; ++n) {
      std::size_t kept = 0;
      for (long tries = 0; kept < 12 && tries < 2000000; ++tries) {
        Perm id = identity_perm(), a = id, b = id, B = id, order = id;
        std::shuffle(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(n), rng);
        std::shuffle(B.begin(), B.begin() + static_cast<std::ptrdiff_t>(n), rng);
        std::shuffle(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), rng);
        std::size_t swaps = rng() % (n / 2 + 1);
        for (std::size_t i = 0; i < swaps; ++i) std::swap(a[order[2 * i]], a[order[2 * i + 1]]);
        Quotient q;
        q.n = n;
        q.image[static_cast<std::size_t>(Symbol::a)] = a;
        q.image[static_cast<std::size_t>(Symbol::b)] = b;
        q.image[static_cast<std::size_t>(Symbol::B)] = B;
        q.image[static_cast<std::size_t>(Symbol::bp)] = compose(compose(a, invert_perm(b, n), n), a, n);
        q.image[static_cast<std::size_t>(Symbol::Bp)] = compose(compose(a, invert_perm(B, n), n), a, n);
        bool ok = true;
        for (const auto& r : relators()) ok = ok && evaluate(q, r) == id;
        if (!ok) continue;
        bool abelian = true;
        for (std::size_t i = 0; i < 5 && abelian; ++i)
          for (std::size_t j = 0; j < i && abelian; ++j)
            abelian = compose(q.image[i], q.image[j], n) == compose(q.image[j], q.image[i], n);
        if (abelian) continue;
        out.push_back(q);
        ++kept;
      }
    }
    return out;
  }();
  return table;
}

}  // namespace

bool separated_by_quotient(const FreeWord& w1, const FreeWord& w2) {
  for (const auto& q : quotients())
    if (evaluate(q, w1) != evaluate(q, w2)) return true;
  return false;
}


ProofResult bfs_prove_equal(const FreeWord& w1, const FreeWord& w2, const OracleLimits& limits) {
  ProofResult result;
  if (abelian_image(w1) != abelian_image(w2)) return result;
  if (separated_by_quotient(w1, w2)) return result;

  std::vector<RewriteStep> head, tail;
  FreeWord n1 = push_a_right(normalize(w1, head), head);
  FreeWord n2 = push_a_right(normalize(w2, tail), tail);
  auto ends_in_a = [](const FreeWord& w) { return !w.empty() && w.back().symbol == Symbol::a; };
  if (ends_in_a(n1) != ends_in_a(n2)) return result;
  if (ends_in_a(n1)) {
    n1.pop_back();
    n2.pop_back();
  }

  auto middle = subgroup_search(n1, n2, limits, result.expanded);
  if (!middle) return result;
  std::vector<RewriteStep> trace = std::move(head);
  trace.insert(trace.end(), middle->begin(), middle->end());
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) trace.push_back(reverse_step(*it));
  if (!(replay(w1, trace) == w2)) throw std::logic_error("oracle: trace does not replay");
  result.proved = true;
  result.trace = std::move(trace);
  return result;
}

}  // namespace torslice
