#pragma once

// Word problem, conjugacy canonical forms and the sliceness verdict for the
// group
//
//   G' = < a, b, b', B, B' | a^2 = 1, ab = (b')^-1 a, aB = (B')^-1 a,
//                             bB^-1 = B'(b')^-1, b^-1 B = (B')^-1 b' >.
//
// Elements are handled through an explicit model. With s = bB^-1 and
// t = b'b^-1 the last two relations say st = ts, so the subgroup generated by
// b, b', B, B' is the free product Z^2 * Z of the abelian group on (s, t) and
// the cyclic group on b; conjugation by a is the involution theta with
//
//   theta(s) = b^-1 s b,   theta(t) = b^-1 t b,   theta(b) = b^-1 t^-1.
//
// An element is stored as an alternating syllable sequence h in Z^2 * Z
// together with a flag for the trailing factor a, i.e. g = h a^flag.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torslice/gauss.hpp"
#include "torslice/word.hpp"

namespace torslice {

/// One syllable of the free product: s^x t^y (kind ST) or b^x (kind BB,
/// y unused and kept at 0). Ordering compares kind first (ST before BB),
/// then the exponents numerically.
struct Syllable {
  enum class Kind : unsigned char { ST, BB };

  Kind kind = Kind::ST;
  std::int64_t x = 0;
  std::int64_t y = 0;

  static Syllable st(std::int64_t k, std::int64_t l) { return {Kind::ST, k, l}; }
  static Syllable bb(std::int64_t m) { return {Kind::BB, m, 0}; }

  bool is_zero() const { return x == 0 && y == 0; }
  Syllable inverse() const { return {kind, -x, -y}; }

  auto operator<=>(const Syllable&) const = default;
};

using SyllableWord = std::vector<Syllable>;

/// "S(k,l)" / "B(m)" joined by '.'; the empty sequence prints as "".
std::string format_syllables(const SyllableWord& h);

/// g = h * a^a_flag with h alternating and free of zero syllables.
struct ModelElement {
  SyllableWord h;
  bool a_flag = false;

  static ModelElement identity() { return {}; }
  bool is_identity() const { return h.empty() && !a_flag; }
  bool operator==(const ModelElement&) const = default;
};

std::string format_element(const ModelElement& x);

ModelElement generator_image(Letter l);
ModelElement multiply(const ModelElement& x, const ModelElement& y);
ModelElement invert(const ModelElement& x);
/// Conjugation by a.
ModelElement theta(const ModelElement& x);

/// Normal form of the element a word represents.
ModelElement reduce_word(const FreeWord& w);
/// A word representing x, via s -> b B^-1, t -> b' b^-1.
FreeWord to_word(const ModelElement& x);

bool equal(const FreeWord& w1, const FreeWord& w2);
bool is_trivial(const FreeWord& w);

/// A defining relation lhs = rhs.
struct Relation {
  const char* name;
  FreeWord lhs;
  FreeWord rhs;
};

/// r1 = a a, r2 = a b a b', r3 = a B a B', r4 = b B^-1 b' B'^-1,
/// r5 = b^-1 B b'^-1 B'.
const std::array<FreeWord, 5>& relators();
/// The same presentation as relations: a a = 1, a b = b'^-1 a,
/// a B = B'^-1 a, b B^-1 = B' b'^-1, b^-1 B = B'^-1 b'.
const std::array<Relation, 5>& relations();

class UnsupportedAFlag : public std::domain_error {
 public:
  UnsupportedAFlag()
      : std::domain_error("UnsupportedAFlag: conjugacy classes of elements with odd a-count are not implemented") {}
};

/// Cyclically reduced syllable cycle (first and last syllables of equal kind
/// merged until they differ).
SyllableWord cyclic_reduce(SyllableWord h);

/// Canonical representative of conj(x) united with conj(theta(x)): the least
/// whole-syllable rotation of the cyclic reductions of x and theta(x).
struct CanonicalClass {
  SyllableWord cycle;

  bool empty() const { return cycle.empty(); }
  std::string text() const { return format_syllables(cycle); }
  auto operator<=>(const CanonicalClass&) const = default;
};

/// Throws UnsupportedAFlag when x.a_flag is set.
CanonicalClass canon_class(const ModelElement& x);

/// Value of the invariant: the sorted pair of canonical classes of w and
/// psi(w). Trivial iff both entries are empty.
struct InvariantValue {
  CanonicalClass first;
  CanonicalClass second;

  bool trivial() const { return first.empty() && second.empty(); }
  bool operator==(const InvariantValue&) const = default;
};

InvariantValue invariant_of_word(const FreeWord& w);
InvariantValue invariant(const GaussDiagram& d);
InvariantValue invariant_at(const GaussDiagram& d, std::size_t ref);

/// Coordinates in the Z+Z subgroup {(B'B^-1)^k (b'b^-1)^l}. raw holds the
/// internal (s, t) exponents (K, L); since (B'B^-1)^k (b'b^-1)^l = s^2k t^(k+l)
/// the basis coordinates exist only when K is even.
struct Z2Coords {
  std::int64_t raw_k = 0;
  std::int64_t raw_l = 0;
  std::optional<std::pair<std::int64_t, std::int64_t>> basis;

  bool operator==(const Z2Coords&) const = default;
};

/// nullopt when the class is not in the Z+Z subgroup.
std::optional<Z2Coords> z2_coords(const CanonicalClass& c);

enum class Verdict { NotSlice, Inconclusive };
std::string_view to_string(Verdict v);

/// A nontrivial value rules out sliceness; a trivial one decides nothing.
Verdict verdict(const InvariantValue& v);

}  // namespace torslice
