#include "doctest.h"
#include "support.hpp"
#include "torslice/oracle.hpp"

using namespace torslice;

namespace {

ModelElement st_element(std::int64_t k, std::int64_t l) {
  if (k == 0 && l == 0) return ModelElement::identity();
  return {{Syllable::st(k, l)}, false};
}

ModelElement reduce(const char* text) { return reduce_word(parse_word(text)); }

}  // namespace

TEST_SUITE("group") {

TEST_CASE("relators, their inverses and their psi-images are trivial") {
  for (const auto& r : relators()) {
    CHECK(is_trivial(r));
    CHECK(is_trivial(inverse(r)));
    CHECK(is_trivial(psi(r)));
  }
  for (const auto& rel : relations()) CHECK(equal(rel.lhs, rel.rhs));
}

TEST_CASE("generator images") {
  CHECK(format_element(generator_image({Symbol::b, 1})) == "B(1)");
  CHECK(format_element(generator_image({Symbol::bp, 1})) == "S(0,1).B(1)");
  CHECK(format_element(generator_image({Symbol::B, 1})) == "S(-1,0).B(1)");
  CHECK(format_element(generator_image({Symbol::Bp, 1})) == "S(1,1).B(1)");
  CHECK(format_element(generator_image({Symbol::a, 1})) == "a");
  CHECK(format_element(ModelElement::identity()) == "1");
}

TEST_CASE("word problem examples") {
  CHECK(equal(parse_word("a b"), parse_word("b'^-1 a")));
  CHECK_FALSE(equal(parse_word("b"), parse_word("b'")));
  CHECK(equal(parse_word("b B^-1 b' b^-1"), parse_word("b' b^-1 b B^-1")));
  CHECK(is_trivial(parse_word("a a")));
  CHECK(is_trivial(parse_word("a^-1 a^-1")));
  CHECK(is_trivial({}));
  CHECK_FALSE(is_trivial(parse_word("a")));
  CHECK(reduce("a b a") == theta(reduce("b")));
  CHECK(reduce("a b a") == reduce("b'^-1"));
}

TEST_CASE("the 34-letter example reduces to s^4 t^4") {
  const FreeWord& w = rgb_example_word();
  CHECK(w.size() == 34);
  CHECK(reduce_word(w) == st_element(4, 4));
  CHECK(equal(w, parse_word("B' B^-1 B' B^-1 b' b^-1 b' b^-1")));
  CHECK_FALSE(is_trivial(w));
}

TEST_CASE("homomorphism and inverse laws") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    std::size_t l1 = rng() % 12, l2 = rng() % 12;
    FreeWord u = random_word(l1, rng);
    FreeWord v = random_word(l2, rng);
    CHECK(reduce_word(concat(u, v)) == multiply(reduce_word(u), reduce_word(v)));
    CHECK(reduce_word(inverse(u)) == invert(reduce_word(u)));
    CHECK(is_trivial(concat(u, inverse(u))));
    CHECK(reduce_word(to_word(reduce_word(u))) == reduce_word(u));
  }
}

TEST_CASE("theta is conjugation by a and an involution") {
  std::mt19937_64 rng(32);
  const FreeWord a = parse_word("a");
  for (int i = 0; i < 300; ++i) {
    std::size_t len = rng() % 12;
    FreeWord u = random_word(len, rng);
    ModelElement x = reduce_word(u);
    CHECK(theta(theta(x)) == x);
    CHECK(reduce_word(concat(concat(a, u), a)) == theta(x));
  }
}

TEST_CASE("words padded with relators stay equal, also after psi") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 300; ++i) {
    std::size_t len = rng() % 10, k = 1 + rng() % 3;
    FreeWord u = random_word(len, rng);
    FreeWord v = support::with_relators(u, k, rng);
    CHECK(equal(u, v));
    CHECK(equal(psi(u), psi(v)));
  }
}

TEST_CASE("model equality never contradicts the permutation quotients") {
  std::mt19937_64 rng(34);
  std::size_t unequal = 0, separated = 0;
  for (int i = 0; i < 3000; ++i) {
    std::size_t l1 = rng() % 9;
    FreeWord u = random_word(l1, rng);
    FreeWord v;
    if (i % 3 == 0) {
      v = support::with_relators(u, 2, rng);
    } else {
      std::size_t l2 = rng() % 9;
      v = random_word(l2, rng);
    }
    if (equal(u, v)) {
      CHECK_FALSE(separated_by_quotient(u, v));
    } else {
      ++unequal;
      separated += separated_by_quotient(u, v);
    }
  }
  CHECK(unequal > 1000);
  CHECK(separated == unequal);
}

TEST_CASE("Z+Z law") {
  const FreeWord S = parse_word("B' B^-1"), T = parse_word("b' b^-1");
  for (long k = -5; k <= 5; ++k)
    for (long l = -5; l <= 5; ++l) {
      FreeWord w = concat(support::power(S, k), support::power(T, l));
      ModelElement x = reduce_word(w);
      CHECK(x == st_element(2 * k, k + l));
      CHECK(canon_class(reduce_word(psi(w))) == canon_class(st_element(-2 * k, -(k + l))));
    }
}

TEST_CASE("z2 coordinates") {
  auto coords = [](const char* text) { return z2_coords(canon_class(reduce(text))); };
  auto c = coords("B' B^-1 b' b^-1 b' b^-1");
  REQUIRE(c);
  CHECK(c->raw_k == 2);
  CHECK(c->raw_l == 3);
  REQUIRE(c->basis);
  CHECK(*c->basis == std::pair<std::int64_t, std::int64_t>{1, 2});

  auto p = z2_coords(canon_class(reduce_word(rgb_example_word())));
  REQUIRE(p);
  CHECK(*p->basis == std::pair<std::int64_t, std::int64_t>{2, 2});

  auto odd = coords("b B^-1");  // s alone: K = 1
  REQUIRE(odd);
  CHECK(odd->raw_k == 1);
  CHECK_FALSE(odd->basis);

  auto id = coords("");
  REQUIRE(id);
  CHECK(id->raw_k == 0);
  CHECK(*id->basis == std::pair<std::int64_t, std::int64_t>{0, 0});

  CHECK_FALSE(coords("b"));
}

TEST_CASE("canonical classes") {
  CHECK(canon_class(st_element(4, 4)) != canon_class(st_element(-4, -4)));
  CHECK(canon_class(st_element(4, 4)).text() == "S(4,4)");
  CHECK(canon_class(ModelElement::identity()).empty());
  CHECK_THROWS_AS(canon_class(reduce("a")), UnsupportedAFlag);
  CHECK_THROWS_AS(canon_class(reduce("b a")), UnsupportedAFlag);
  // b s b^-1 is conjugate to s
  CHECK(canon_class(reduce("b b B^-1 b^-1")) == canon_class(reduce("b B^-1")));
  // theta(s) = b^-1 s b lies in the class of s
  CHECK(canon_class(reduce("a b B^-1 a")) == canon_class(reduce("b B^-1")));
}

TEST_CASE("canonical class is constant on conjugates") {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 400; ++i) {
    std::size_t len = rng() % 10, glen = rng() % 6;
    FreeWord u = random_word(len, rng);
    if (reduce_word(u).a_flag) u = concat(u, parse_word("a"));
    FreeWord g = random_word(glen, rng);
    ModelElement x = reduce_word(u);
    CHECK(canon_class(reduce_word(concat(concat(g, u), inverse(g)))) == canon_class(x));
    CHECK(canon_class(theta(x)) == canon_class(x));
    CHECK(cyclic_reduce(cyclic_reduce(x.h)) == cyclic_reduce(x.h));
  }
}

TEST_CASE("invariant values and verdicts") {
  InvariantValue v = invariant_of_word(rgb_example_word());
  CHECK(v.first.text() == "S(-4,-4)");
  CHECK(v.second.text() == "S(4,4)");
  CHECK_FALSE(v.trivial());
  CHECK(verdict(v) == Verdict::NotSlice);
  CHECK(to_string(verdict(v)) == "NotSlice");

  InvariantValue t = invariant(parse_gauss_code("O1+U2+O3+U1+O2+U3+"));
  CHECK(t.trivial());
  CHECK(verdict(t) == Verdict::Inconclusive);
  CHECK(invariant(parse_gauss_code("O1+U2+O3+O2+U1+U3+")).trivial());
  CHECK(invariant(GaussDiagram{}).trivial());
}

TEST_CASE("invariant is sorted and symmetric under psi") {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 300; ++i) {
    std::size_t len = 2 * (rng() % 7);
    FreeWord u = random_word(len, rng);
    if (reduce_word(u).a_flag) continue;
    InvariantValue v = invariant_of_word(u);
    CHECK(v.first <= v.second);
    CHECK(invariant_of_word(psi(u)) == v);
  }
}

TEST_CASE("invariant does not depend on the reference arc") {
  for (const auto& d : support::mixed_diagrams(60, 10, 37))
    for (std::size_t ref = 1; ref <= d.endpoint_count(); ++ref) CHECK(invariant_at(d, ref) == invariant(d));
}

}
