#include "torslice/selfcheck.hpp"

#include "torslice/group.hpp"

namespace torslice {

const FreeWord& rgb_example_word() {
  static const FreeWord w = parse_word(
      "b b^-1 B' B'^-1 B B^-1 B B^-1 B' a B' B^-1 b' a b b^-1 b a b' a a b'^-1 "
      "a b^-1 a B^-1 b' a a B^-1 B b^-1 a b^-1");
  return w;
}

std::vector<Identity> model_identities() {
  std::vector<Identity> out;
  out.push_back({"st=ts", parse_word("b B^-1 b' b^-1"), parse_word("b' b^-1 b B^-1")});
  for (const char* x : {"b", "B", "b'"}) {
    FreeWord gen = parse_word(x);
    FreeWord conj = concat(concat(parse_word("a"), gen), parse_word("a"));
    out.push_back({std::string("a ") + x + " a=theta(" + x + ")", conj, to_word(theta(reduce_word(gen)))});
  }
  return out;
}

FreeWord random_word(std::size_t length, std::mt19937_64& rng) {
  FreeWord w;
  for (std::size_t i = 0; i < length; ++i) {
    auto r = rng() % 10;
    w.push_back({static_cast<Symbol>(r / 2), r % 2 == 0 ? +1 : -1});
  }
  return w;
}

namespace {

CheckResult check(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const OracleLimits& limits, std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);

  bool ok = true;
  std::string bad;
  for (const auto& r : relators())
    for (const auto& w : {r, inverse(r), psi(r)})
      if (!is_trivial(w)) {
        ok = false;
        bad = format_word(w);
      }
  out.push_back(check("relators, inverses and psi-images reduce to 1", ok, bad));

  ok = true;
  for (int i = 0; i < 200 && ok; ++i) {
    const std::size_t len = rng() % 20;
    ModelElement x = reduce_word(random_word(len, rng));
    ok = theta(theta(x)) == x;
  }
  out.push_back(check("theta is an involution", ok));

  ok = true;
  for (int i = 0; i < 200 && ok; ++i) {
    const std::size_t len = rng() % 20;
    FreeWord w = random_word(len, rng);
    FreeWord conj = concat(concat(parse_word("a"), w), parse_word("a"));
    ok = reduce_word(conj) == theta(reduce_word(w));
  }
  out.push_back(check("a w a reduces to theta(w)", ok));

  ok = true;
  for (int i = 0; i < 200 && ok; ++i) {
    const std::size_t len = rng() % 20;
    ModelElement x = reduce_word(random_word(len, rng));
    ok = reduce_word(to_word(x)) == x;
  }
  out.push_back(check("s -> b B^-1, t -> b' b^-1 round-trips", ok));

  for (const auto& id : model_identities()) {
    auto proof = bfs_prove_equal(id.lhs, id.rhs, limits);
    bool replays = proof.proved && replay(id.lhs, proof.trace) == id.rhs;
    out.push_back(check("derived from relations: " + id.name, replays,
                        proof.proved ? std::to_string(proof.trace.size()) + " steps" : "Unknown"));
  }

  ok = true;
  std::size_t proved = 0;
  for (int i = 0; i < 100 && ok; ++i) {
    const std::size_t lu = rng() % 5;
    FreeWord u = random_word(lu, rng);
    const std::size_t lv = rng() % 5;
    FreeWord v = random_word(lv, rng);
    auto proof = bfs_prove_equal(u, v, {limits.max_len, std::min<std::size_t>(limits.budget, 2000)});
    if (proof.proved) {
      ++proved;
      ok = equal(u, v) && replay(u, proof.trace) == v;
      if (!ok) bad = format_word(u) + " = " + format_word(v);
    }
  }
  out.push_back(check("oracle proofs agree with the model", ok,
                      ok ? std::to_string(proved) + " proved" : bad));

  ModelElement ex = reduce_word(rgb_example_word());
  out.push_back(check("example word reduces to S(4,4)",
                      ex == ModelElement{{Syllable::st(4, 4)}, false}, format_element(ex)));
  return out;
}

}  // namespace torslice
