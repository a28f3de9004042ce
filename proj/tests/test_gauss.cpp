#include "doctest.h"
#include "support.hpp"

using namespace torslice;

namespace {

const char* kTrefoil = "O1+U2+O3+U1+O2+U3+";

}  // namespace

TEST_SUITE("gauss") {

TEST_CASE("parse and serialize round trip") {
  CHECK(serialize(parse_gauss_code(kTrefoil)) == kTrefoil);
  CHECK(serialize(parse_gauss_code("O1+, U2+ U1+,O2+")) == "O1+U2+U1+O2+");
  CHECK(serialize(parse_gauss_code("Ox-Uy+Ux-Oy+")) == "Ox-Uy+Ux-Oy+");
  CHECK(parse_gauss_code("").empty());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    GaussDiagram d = random_diagram(rng() % 10, rng);
    CHECK(parse_gauss_code(serialize(d)) == d);
  }
}

TEST_CASE("chord ids follow first appearance") {
  GaussDiagram d = parse_gauss_code("U7+O3-O7+U3-");
  CHECK(d.chord_count() == 2);
  CHECK(d.label(0) == "7");
  CHECK(d.chord("3") == 1);
  CHECK(d.ends(0) == std::array<std::size_t, 2>{1, 3});
  CHECK(d.endpoint(2).passage == Passage::Over);
  CHECK(d.endpoint(2).sign == -1);
}

TEST_CASE("malformed codes report every issue") {
  try {
    parse_gauss_code("O1+U2+O1+");
    FAIL("accepted");
  } catch (const DiagramError& e) {
    CHECK(e.has(DiagramErrorKind::UnmatchedChord));
    CHECK(e.has(DiagramErrorKind::DuplicatePassage));
    CHECK(e.issues().size() == 2);
  }
  auto kind_of = [](const char* code) {
    try {
      parse_gauss_code(code);
    } catch (const DiagramError& e) {
      return e.issues().front().kind;
    }
    return DiagramErrorKind::IndexOutOfRange;
  };
  CHECK(kind_of("O1+U1-") == DiagramErrorKind::SignMismatch);
  CHECK(kind_of("X1+") == DiagramErrorKind::BadToken);
  CHECK(kind_of("O1") == DiagramErrorKind::BadToken);
  CHECK(kind_of("O+U+") == DiagramErrorKind::BadToken);
  CHECK(kind_of("O1*U1*") == DiagramErrorKind::BadToken);
  CHECK(kind_of("O1+") == DiagramErrorKind::UnmatchedChord);
  CHECK(kind_of("U1+U1+") == DiagramErrorKind::DuplicatePassage);
  CHECK(kind_of("O1+U1+O1+") == DiagramErrorKind::DuplicatePassage);
}

TEST_CASE("bad chord and index arguments") {
  GaussDiagram d = parse_gauss_code(kTrefoil);
  CHECK_THROWS_AS(d.chord("9"), DiagramError);
  CHECK_THROWS_AS(d.endpoint(0), DiagramError);
  CHECK_THROWS_AS(d.endpoint(7), DiagramError);
  CHECK_THROWS_AS(position_parity(d, 1, 7), DiagramError);
  CHECK_THROWS_AS(chord_parity(d, 3), DiagramError);
  CHECK_FALSE(d.find_chord("4"));
}

TEST_CASE("linking examples") {
  GaussDiagram t = parse_gauss_code(kTrefoil);
  CHECK(linked(t, t.chord("1"), t.chord("2")));
  CHECK(linked(t, t.chord("2"), t.chord("3")));
  GaussDiagram nested = parse_gauss_code("O1+O2+U2+U1+");
  CHECK_FALSE(linked(nested, 0, 1));
  GaussDiagram apart = parse_gauss_code("O1+U1+O2+U2+");
  CHECK_FALSE(linked(apart, 0, 1));
}

TEST_CASE("linking is symmetric and irreflexive, and agrees with the alternation reading") {
  for (std::size_t n = 0; n <= 5; ++n)
    support::for_each_diagram(n, [](const GaussDiagram& d) {
      for (ChordId c = 0; c < d.chord_count(); ++c) {
        CHECK_FALSE(linked(d, c, c));
        for (ChordId e = 0; e < d.chord_count(); ++e) {
          CHECK(linked(d, c, e) == linked(d, e, c));
          CHECK(linked(d, c, e) == support::ref_linked(d, c, e));
        }
      }
    });
}

TEST_CASE("parity examples") {
  GaussDiagram t = parse_gauss_code(kTrefoil);
  for (ChordId c = 0; c < 3; ++c) CHECK(chord_parity(t, c) == Parity::Even);
  GaussDiagram h = parse_gauss_code("O1+U2+U1+O2+");
  CHECK(chord_parity(h, 0) == Parity::Odd);
  CHECK(even_link_parity(h, 0) == Parity::Even);
  GaussDiagram k = parse_gauss_code("O1+U2+O3+O2+U1+U3+");
  CHECK(chord_parity(k, k.chord("3")) == Parity::Even);
  CHECK(chord_parity(k, k.chord("1")) == Parity::Odd);
  CHECK(even_link_parity(k, k.chord("1")) == Parity::Odd);
  CHECK(even_link_parity(k, k.chord("2")) == Parity::Odd);
  CHECK(even_link_parity(k, k.chord("3")) == Parity::Even);
}

TEST_CASE("position parity examples") {
  GaussDiagram t = parse_gauss_code(kTrefoil);
  CHECK(position_parity(t, 1, 1) == Parity::Odd);
  CHECK(position_parity(t, 2, 1) == Parity::Even);
  CHECK(position_parity(t, 1, 2) == Parity::Even);  // counted 6th from arc 2
  CHECK(position_parity(t, 2, 2) == Parity::Odd);
}

TEST_CASE("moving the reference arc by one flips every position parity") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    GaussDiagram d = random_diagram(1 + rng() % 8, rng);
    const std::size_t m = d.endpoint_count();
    for (std::size_t ref = 1; ref <= m; ++ref)
      for (std::size_t k = 1; k <= m; ++k)
        CHECK(position_parity(d, k, ref) != position_parity(d, k, ref % m + 1));
  }
}

TEST_CASE("a chord is even iff its endpoints have opposite position parity (all diagrams up to 8 chords)") {
  std::size_t diagrams = 0;
  bool ok = true;
  for (std::size_t n = 0; n <= 8; ++n)
    support::for_each_diagram(n, [&](const GaussDiagram& d) {
      ++diagrams;
      const std::size_t m = d.endpoint_count();
      for (ChordId c = 0; c < d.chord_count(); ++c) {
        auto [p, q] = d.ends(c);
        bool even = chord_parity(d, c) == Parity::Even;
        for (std::size_t ref = 1; ref <= m; ++ref)
          ok = ok && (even == (position_parity(d, p, ref) != position_parity(d, q, ref)));
      }
    });
  CHECK(ok);
  CHECK(diagrams == 1 + 1 + 3 + 15 + 105 + 945 + 10395 + 135135 + 2027025);
}

TEST_CASE("parity table agrees with the single-chord queries") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    GaussDiagram d = random_diagram(rng() % 15, rng);
    ParityTable t = parity_table(d);
    for (ChordId c = 0; c < d.chord_count(); ++c) {
      CHECK(t.chord[c] == chord_parity(d, c));
      CHECK(t.even_link[c] == even_link_parity(d, c));
      CHECK((t.chord[c] == Parity::Even) == support::ref_even(d, c));
    }
  }
}

TEST_CASE("connected sum") {
  GaussDiagram h = parse_gauss_code("O1+U2+U1+O2+");
  CHECK(serialize(connected_sum(h, h)) == "O1+U2+U1+O2+O3+U4+U3+O4+");
  GaussDiagram t = parse_gauss_code(kTrefoil);
  GaussDiagram tt = connected_sum(t, t);
  CHECK(tt.chord_count() == 6);
  for (ChordId c = 0; c < 6; ++c) CHECK(chord_parity(tt, c) == Parity::Even);
  GaussDiagram lettered = parse_gauss_code("Oa+Ub+Ua+Ob+");
  CHECK(serialize(connected_sum(lettered, h)) == "Oa+Ub+Ua+Ob+O1+U2+U1+O2+");
  CHECK(fresh_label(parse_gauss_code("O2+U9+U2+O9+")) == "10");
}

TEST_CASE("connected sum keeps parities and adds no linking across summands") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    GaussDiagram d1 = random_diagram(rng() % 7, rng);
    GaussDiagram d2 = random_diagram(rng() % 7, rng);
    GaussDiagram s = connected_sum(d1, d2);
    const std::size_t n1 = d1.chord_count();
    REQUIRE(s.chord_count() == n1 + d2.chord_count());
    for (ChordId c = 0; c < n1; ++c) CHECK(chord_parity(s, c) == chord_parity(d1, c));
    for (ChordId c = 0; c < d2.chord_count(); ++c) {
      CHECK(chord_parity(s, n1 + c) == chord_parity(d2, c));
      for (ChordId e = 0; e < n1; ++e) CHECK_FALSE(linked(s, n1 + c, e));
    }
  }
}

}
