#include "torslice/moves.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <thread>

namespace torslice {

namespace {

using Sequence = std::vector<LabelledEndpoint>;

Passage opposite(Passage p) { return p == Passage::Over ? Passage::Under : Passage::Over; }
char passage_char(Passage p) { return p == Passage::Over ? 'O' : 'U'; }
char sign_char(int s) { return s > 0 ? '+' : '-'; }

// Portable bounded draw; the distribution objects of the standard library are
// not guaranteed to agree across implementations.
std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

[[noreturn]] void fail(const std::string& move, const std::string& why) {
  throw MoveNotApplicable(move + ": " + why);
}

void check_slot(const GaussDiagram& d, std::size_t slot, const char* move) {
  if (slot < 1 || slot > d.endpoint_count() + 1)
    fail(move, "slot " + std::to_string(slot) + " outside 1.." + std::to_string(d.endpoint_count() + 1));
}

std::string unused_label(const GaussDiagram& d, const std::string& requested, const char* move) {
  if (requested.empty()) return fresh_label(d);
  if (d.find_chord(requested)) fail(move, "label " + requested + " already in use");
  return requested;
}

// Labels of the two chords an R2Insert adds.
std::pair<std::string, std::string> r2_labels(const GaussDiagram& d, const R2Insert& m) {
  std::string c = unused_label(d, m.label_c, "R2Insert");
  std::string e = m.label_d;
  if (e.empty()) {
    e = std::to_string(std::stoull(fresh_label(d)) + (m.label_c.empty() ? 1 : 0));
    while (d.find_chord(e) || e == c) e = std::to_string(std::stoull(e) + 1);
  } else {
    unused_label(d, e, "R2Insert");
  }
  if (c == e) fail("R2Insert", "both chords labelled " + c);
  return {c, e};
}

struct R2Sites {
  std::size_t lo1;  // first position of the earlier site
  std::size_t lo2;  // first position of the later site
};

std::optional<R2Sites> find_r2_sites(const GaussDiagram& d, ChordId c, ChordId e,
                                     Strictness strictness, std::string* why) {
  auto note = [why](const char* s) {
    if (why) *why = s;
    return std::nullopt;
  };
  if (c == e) return note("the two chords coincide");
  auto [c1, c2] = d.ends(c);
  auto [e1, e2] = d.ends(e);
  auto adjacent = [](std::size_t i, std::size_t j) { return i + 1 == j || j + 1 == i; };
  std::array<std::size_t, 2> partner;
  if (adjacent(c1, e1) && adjacent(c2, e2))
    partner = {e1, e2};
  else if (adjacent(c1, e2) && adjacent(c2, e1))
    partner = {e2, e1};
  else
    return note("endpoints do not form two adjacent pairs");
  if (d.endpoint(c1).passage != d.endpoint(partner[0]).passage)
    return note("passages within a pair differ");
  if (strictness == Strictness::Strict && d.endpoint(c1).sign == d.endpoint(e1).sign)
    return note("signs are not opposite");
  std::size_t s1 = std::min(c1, partner[0]);
  std::size_t s2 = std::min(c2, partner[1]);
  return R2Sites{std::min(s1, s2), std::max(s1, s2)};
}

struct TriangleCheck {
  bool ok = false;
  std::string why;
};

TriangleCheck check_triangle(const GaussDiagram& d, std::array<std::size_t, 3> sites) {
  std::sort(sites.begin(), sites.end());
  const std::size_t m = d.endpoint_count();
  for (auto k : sites)
    if (k < 1 || k + 1 > m) return {false, "site " + std::to_string(k) + " out of range"};
  if (sites[1] < sites[0] + 2 || sites[2] < sites[1] + 2) return {false, "sites overlap"};
  std::array<std::array<ChordId, 2>, 3> chords;
  for (int i = 0; i < 3; ++i) {
    chords[i] = {d.endpoint(sites[i]).chord, d.endpoint(sites[i] + 1).chord};
    if (chords[i][0] == chords[i][1]) return {false, "a site holds both ends of one chord"};
  }
  auto shared = [&](int i, int j) {
    int n = 0;
    for (auto p : chords[i])
      for (auto q : chords[j]) n += p == q;
    return n;
  };
  if (shared(0, 1) != 1 || shared(0, 2) != 1 || shared(1, 2) != 1)
    return {false, "sites do not pairwise share exactly one chord"};
  bool has_top = false;
  for (auto k : sites)
    has_top |= d.endpoint(k).passage == Passage::Over && d.endpoint(k + 1).passage == Passage::Over;
  if (!has_top) return {false, "no site carries two Over passages (cyclic triangle)"};
  return {true, {}};
}

GaussDiagram apply_move(const GaussDiagram& d, const R1Insert& m, Strictness) {
  check_slot(d, m.slot, "R1Insert");
  if (m.sign != 1 && m.sign != -1) fail("R1Insert", "sign must be +1 or -1");
  std::string label = unused_label(d, m.label, "R1Insert");
  Sequence seq = d.labelled();
  auto at = seq.begin() + static_cast<std::ptrdiff_t>(m.slot - 1);
  seq.insert(at, {{label, m.first, m.sign}, {label, opposite(m.first), m.sign}});
  return GaussDiagram::from_endpoints(seq);
}

GaussDiagram apply_move(const GaussDiagram& d, const R1Delete& m, Strictness) {
  auto c = d.find_chord(m.label);
  if (!c) fail("R1Delete", "unknown chord " + m.label);
  auto [e1, e2] = d.ends(*c);
  if (e2 != e1 + 1) fail("R1Delete", "endpoints of " + m.label + " are not adjacent");
  Sequence seq = d.labelled();
  seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(e1 - 1), seq.begin() + static_cast<std::ptrdiff_t>(e2));
  return GaussDiagram::from_endpoints(seq);
}

GaussDiagram apply_move(const GaussDiagram& d, const R2Insert& m, Strictness) {
  check_slot(d, m.slot1, "R2Insert");
  check_slot(d, m.slot2, "R2Insert");
  if (m.slot1 > m.slot2) fail("R2Insert", "slot1 must not exceed slot2");
  if (m.sign != 1 && m.sign != -1) fail("R2Insert", "sign must be +1 or -1");
  auto [c, e] = r2_labels(d, m);
  Passage first = m.over == OverStrand::First ? Passage::Over : Passage::Under;
  Passage second = opposite(first);
  Sequence pair1 = {{c, first, m.sign}, {e, first, -m.sign}};
  Sequence pair2 = {{c, second, m.sign}, {e, second, -m.sign}};
  if (m.interleaving == Interleaving::Antiparallel) std::swap(pair2[0], pair2[1]);

  Sequence src = d.labelled();
  Sequence seq;
  seq.reserve(src.size() + 4);
  for (std::size_t k = 1; k <= src.size() + 1; ++k) {
    if (k == m.slot1) seq.insert(seq.end(), pair1.begin(), pair1.end());
    if (k == m.slot2) seq.insert(seq.end(), pair2.begin(), pair2.end());
    if (k <= src.size()) seq.push_back(src[k - 1]);
  }
  return GaussDiagram::from_endpoints(seq);
}

GaussDiagram apply_move(const GaussDiagram& d, const R2Delete& m, Strictness strictness) {
  auto c = d.find_chord(m.label_c);
  auto e = d.find_chord(m.label_d);
  if (!c || !e) fail("R2Delete", "unknown chord");
  std::string why;
  auto sites = find_r2_sites(d, *c, *e, strictness, &why);
  if (!sites) fail("R2Delete", why);
  Sequence seq = d.labelled();
  auto lo2 = static_cast<std::ptrdiff_t>(sites->lo2 - 1);
  auto lo1 = static_cast<std::ptrdiff_t>(sites->lo1 - 1);
  seq.erase(seq.begin() + lo2, seq.begin() + lo2 + 2);
  seq.erase(seq.begin() + lo1, seq.begin() + lo1 + 2);
  return GaussDiagram::from_endpoints(seq);
}

GaussDiagram apply_move(const GaussDiagram& d, const R3& m, Strictness) {
  auto check = check_triangle(d, {m.site_a, m.site_b, m.site_c});
  if (!check.ok) fail("R3", check.why);
  Sequence seq = d.labelled();
  for (auto k : {m.site_a, m.site_b, m.site_c}) std::swap(seq[k - 1], seq[k]);
  return GaussDiagram::from_endpoints(seq);
}

}  // namespace

std::string describe(const MoveDescriptor& m) {
  return std::visit(
      [](const auto& mv) -> std::string {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, R1Insert>) {
          return "R1Insert(" + std::to_string(mv.slot) + "," + passage_char(mv.first) + "," +
                 sign_char(mv.sign) + (mv.label.empty() ? "" : "," + mv.label) + ")";
        } else if constexpr (std::is_same_v<T, R1Delete>) {
          return "R1Delete(" + mv.label + ")";
        } else if constexpr (std::is_same_v<T, R2Insert>) {
          std::string s = "R2Insert(" + std::to_string(mv.slot1) + "," + std::to_string(mv.slot2) + "," +
                          (mv.interleaving == Interleaving::Parallel ? "parallel" : "antiparallel") + "," +
                          (mv.over == OverStrand::First ? "first" : "second") + "," + sign_char(mv.sign);
          if (!mv.label_c.empty() || !mv.label_d.empty()) s += "," + mv.label_c + "," + mv.label_d;
          return s + ")";
        } else if constexpr (std::is_same_v<T, R2Delete>) {
          return "R2Delete(" + mv.label_c + "," + mv.label_d + ")";
        } else {
          return "R3(" + std::to_string(mv.site_a) + "," + std::to_string(mv.site_b) + "," +
                 std::to_string(mv.site_c) + ")";
        }
      },
      m);
}

GaussDiagram apply(const GaussDiagram& d, const MoveDescriptor& m, Strictness strictness) {
  return std::visit([&](const auto& mv) { return apply_move(d, mv, strictness); }, m);
}

MoveDescriptor inverse_move(const GaussDiagram& d, const MoveDescriptor& m, Strictness strictness) {
  if (const auto* ins = std::get_if<R1Insert>(&m)) {
    return R1Delete{unused_label(d, ins->label, "R1Insert")};
  }
  if (const auto* del = std::get_if<R1Delete>(&m)) {
    apply(d, m, strictness);
    auto c = d.chord(del->label);
    auto k = d.ends(c)[0];
    const auto& ep = d.endpoint(k);
    return R1Insert{k, ep.passage, ep.sign, del->label};
  }
  if (const auto* ins = std::get_if<R2Insert>(&m)) {
    auto [c, e] = r2_labels(d, *ins);
    return R2Delete{c, e};
  }
  if (const auto* del = std::get_if<R2Delete>(&m)) {
    auto sites = find_r2_sites(d, d.chord(del->label_c), d.chord(del->label_d), strictness, nullptr);
    if (!sites) apply(d, m, strictness);  // throws with the reason
    const auto& a1 = d.endpoint(sites->lo1);
    const auto& a2 = d.endpoint(sites->lo1 + 1);
    const auto& b1 = d.endpoint(sites->lo2);
    R2Insert inv;
    inv.slot1 = sites->lo1;
    inv.slot2 = sites->lo2 - 2;
    inv.interleaving = a1.chord == b1.chord ? Interleaving::Parallel : Interleaving::Antiparallel;
    inv.over = a1.passage == Passage::Over ? OverStrand::First : OverStrand::Second;
    inv.sign = a1.sign;
    inv.label_c = d.label(a1.chord);
    inv.label_d = d.label(a2.chord);
    if (strictness == Strictness::Loose && a1.sign == a2.sign)
      throw MoveNotApplicable("R2Delete: equal-sign pair has no strict inverse");
    return inv;
  }
  const auto& r3 = std::get<R3>(m);
  apply(d, m, strictness);
  return r3;
}

namespace {

std::vector<R1Delete> r1_deletes(const GaussDiagram& d) {
  std::vector<R1Delete> out;
  for (ChordId c = 0; c < d.chord_count(); ++c) {
    auto [e1, e2] = d.ends(c);
    if (e2 == e1 + 1) out.push_back({d.label(c)});
  }
  return out;
}

std::vector<R2Delete> r2_deletes(const GaussDiagram& d, Strictness strictness) {
  std::vector<R2Delete> out;
  for (ChordId c = 0; c < d.chord_count(); ++c)
    for (ChordId e = c + 1; e < d.chord_count(); ++e)
      if (find_r2_sites(d, c, e, strictness, nullptr)) out.push_back({d.label(c), d.label(e)});
  return out;
}

std::vector<R3> r3_moves(const GaussDiagram& d) {
  // A triangle is determined by one site (k, k+1) plus the sites holding the
  // other ends of its two chords, so only a handful of candidates per site.
  const std::size_t m = d.endpoint_count();
  std::vector<R3> out;
  auto other_end = [&](std::size_t pos) {
    auto [e1, e2] = d.ends(d.endpoint(pos).chord);
    return e1 == pos ? e2 : e1;
  };
  for (std::size_t a = 1; a + 1 <= m; ++a) {
    std::size_t p = other_end(a), q = other_end(a + 1);
    for (std::size_t b : {p - 1, p})
      for (std::size_t c : {q - 1, q}) {
        if (b < 1 || c < 1 || b <= a || c <= a || b == c) continue;
        std::array<std::size_t, 3> s = {a, b, c};
        std::sort(s.begin(), s.end());
        if (!check_triangle(d, s).ok) continue;
        R3 mv{s[0], s[1], s[2]};
        if (std::find(out.begin(), out.end(), mv) == out.end()) out.push_back(mv);
      }
  }
  return out;
}

}  // namespace

std::vector<MoveDescriptor> enumerate_moves(const GaussDiagram& d, std::size_t insert_cap,
                                            Strictness strictness) {
  std::vector<MoveDescriptor> out;
  const std::size_t slots = std::min(d.endpoint_count() + 1, insert_cap);
  for (std::size_t k = 1; k <= slots; ++k)
    for (Passage p : {Passage::Over, Passage::Under})
      for (int s : {+1, -1}) out.emplace_back(R1Insert{k, p, s, {}});
  for (auto& m : r1_deletes(d)) out.emplace_back(std::move(m));
  for (std::size_t k1 = 1; k1 <= slots; ++k1)
    for (std::size_t k2 = k1; k2 <= slots; ++k2)
      for (auto il : {Interleaving::Parallel, Interleaving::Antiparallel})
        for (auto ov : {OverStrand::First, OverStrand::Second})
          for (int s : {+1, -1}) out.emplace_back(R2Insert{k1, k2, il, ov, s, {}, {}});
  for (auto& m : r2_deletes(d, strictness)) out.emplace_back(std::move(m));
  for (auto& m : r3_moves(d)) out.emplace_back(m);
  return out;
}

Walk random_walk_traced(const GaussDiagram& d, std::size_t steps, std::uint64_t seed,
                        Strictness strictness) {
  std::mt19937_64 rng(seed);
  Walk walk{d, {}};
  for (std::size_t step = 0; step < steps; ++step) {
    const GaussDiagram& cur = walk.result;
    const std::size_t slots = cur.endpoint_count() + 1;
    auto r1d = r1_deletes(cur);
    auto r2d = r2_deletes(cur, strictness);
    auto r3 = r3_moves(cur);
    std::vector<int> families = {0, 2};
    if (!r1d.empty()) families.push_back(1);
    if (!r2d.empty()) families.push_back(3);
    if (!r3.empty()) families.push_back(4);
    std::sort(families.begin(), families.end());

    MoveDescriptor m;
    switch (families[pick(rng, families.size())]) {
      case 0:
        m = R1Insert{1 + pick(rng, slots), pick(rng, 2) ? Passage::Over : Passage::Under,
                     pick(rng, 2) ? +1 : -1, {}};
        break;
      case 1: m = r1d[pick(rng, r1d.size())]; break;
      case 2: {
        std::size_t k1 = 1 + pick(rng, slots), k2 = 1 + pick(rng, slots);
        R2Insert ins;
        ins.slot1 = std::min(k1, k2);
        ins.slot2 = std::max(k1, k2);
        ins.interleaving = pick(rng, 2) ? Interleaving::Parallel : Interleaving::Antiparallel;
        ins.over = pick(rng, 2) ? OverStrand::First : OverStrand::Second;
        ins.sign = pick(rng, 2) ? +1 : -1;
        m = ins;
        break;
      }
      case 3: m = r2d[pick(rng, r2d.size())]; break;
      default: m = r3[pick(rng, r3.size())]; break;
    }
    walk.result = apply(cur, m, strictness);
    walk.moves.push_back(std::move(m));
  }
  return walk;
}

GaussDiagram random_walk(const GaussDiagram& d, std::size_t steps, std::uint64_t seed,
                         Strictness strictness) {
  return random_walk_traced(d, steps, seed, strictness).result;
}

GaussDiagram random_diagram(std::size_t chords, std::mt19937_64& rng) {
  std::vector<std::size_t> slots;
  for (std::size_t c = 0; c < chords; ++c) slots.insert(slots.end(), {c, c});
  for (std::size_t i = slots.size(); i > 1; --i) std::swap(slots[i - 1], slots[pick(rng, i)]);

  std::vector<std::size_t> rename(chords, chords);
  std::vector<Passage> first(chords);
  std::vector<int> sign(chords);
  std::size_t next = 0;
  Sequence seq;
  for (auto c : slots) {
    if (rename[c] == chords) {
      rename[c] = next++;
      first[c] = pick(rng, 2) ? Passage::Over : Passage::Under;
      sign[c] = pick(rng, 2) ? +1 : -1;
      seq.push_back({std::to_string(rename[c] + 1), first[c], sign[c]});
    } else {
      seq.push_back({std::to_string(rename[c] + 1), opposite(first[c]), sign[c]});
    }
  }
  return GaussDiagram::from_endpoints(seq);
}

GaussDiagram plant_triangle(const GaussDiagram& d, std::mt19937_64& rng) {
  const std::size_t m = d.endpoint_count();
  std::array<std::size_t, 3> slot = {1 + pick(rng, m + 1), 1 + pick(rng, m + 1), 1 + pick(rng, m + 1)};
  std::sort(slot.begin(), slot.end());

  // rank[i]: 2 top, 1 middle, 0 bottom strand for site i
  std::array<int, 3> rank = {0, 1, 2};
  for (std::size_t i = 3; i > 1; --i) std::swap(rank[i - 1], rank[pick(rng, i)]);

  unsigned long long base = std::stoull(fresh_label(d));
  // chord j joins sites (0,1), (0,2), (1,2) for j = 0, 1, 2
  const std::array<std::array<int, 2>, 3> joins = {{{0, 1}, {0, 2}, {1, 2}}};
  std::array<Sequence, 3> site;
  for (int j = 0; j < 3; ++j) {
    std::string label = std::to_string(base + static_cast<unsigned long long>(j));
    int s = pick(rng, 2) ? +1 : -1;
    auto [u, v] = joins[j];
    bool u_over = rank[u] > rank[v];
    site[u].push_back({label, u_over ? Passage::Over : Passage::Under, s});
    site[v].push_back({label, u_over ? Passage::Under : Passage::Over, s});
  }
  for (auto& st : site)
    if (pick(rng, 2)) std::swap(st[0], st[1]);

  Sequence src = d.labelled();
  Sequence seq;
  for (std::size_t k = 1; k <= m + 1; ++k) {
    for (int i = 0; i < 3; ++i)
      if (slot[i] == k) seq.insert(seq.end(), site[i].begin(), site[i].end());
    if (k <= m) seq.push_back(src[k - 1]);
  }
  return GaussDiagram::from_endpoints(seq);
}

namespace {

FuzzTrial run_trial(const FuzzOptions& o, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t chords = pick(rng, o.max_chords + 1);
  GaussDiagram d;
  if (chords >= 3 && pick(rng, 2)) {
    d = random_diagram(chords - 3, rng);
    d = plant_triangle(d, rng);
  } else {
    d = random_diagram(chords, rng);
  }
  std::size_t steps = o.max_steps == 0 ? 0 : 1 + pick(rng, o.max_steps);
  Walk walk = random_walk_traced(d, steps, rng(), o.strictness);

  FuzzTrial t;
  t.seed = seed;
  t.initial_code = serialize(d);
  for (const auto& mv : walk.moves) t.moves.push_back(describe(mv));
  t.initial = invariant(d);
  t.final = invariant(walk.result);
  t.pass = t.initial == t.final;
  return t;
}

}  // namespace

std::vector<FuzzTrial> run_fuzz(const FuzzOptions& options) {
  std::vector<FuzzTrial> out(options.trials);
  unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(options.trials)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < options.trials; ++i) out[i] = run_trial(options, options.seed + i);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < options.trials; i += threads) out[i] = run_trial(options, options.seed + i);
      });
  }
  return out;
}

}  // namespace torslice
