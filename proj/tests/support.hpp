#pragma once

// Helpers shared by the test binaries: exhaustive diagram enumeration,
// straightforward reference readings of the definitions, and generators of
// diagrams with nontrivial invariant.

#include <array>
#include <cstddef>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "torslice/gauss.hpp"
#include "torslice/group.hpp"
#include "torslice/moves.hpp"
#include "torslice/selfcheck.hpp"
#include "torslice/word.hpp"

namespace support {

using namespace torslice;

/// Every chord diagram on 2n points. Chords are labelled 1..n by first
/// appearance; the first endpoint of chord i is Over, the sign is + for odd
/// labels and - for even ones.
inline void for_each_diagram(std::size_t n, const std::function<void(const GaussDiagram&)>& fn) {
  std::vector<int> partner(2 * n, -1);
  std::function<void()> rec = [&] {
    std::size_t i = 0;
    while (i < partner.size() && partner[i] >= 0) ++i;
    if (i == partner.size()) {
      std::vector<LabelledEndpoint> seq(2 * n);
      std::vector<int> label(2 * n, 0);
      int next = 1;
      for (std::size_t k = 0; k < seq.size(); ++k) {
        auto j = static_cast<std::size_t>(partner[k]);
        bool first = k < j;
        if (first) label[k] = label[j] = next++;
        seq[k] = {std::to_string(label[k]), first ? Passage::Over : Passage::Under, label[k] % 2 ? +1 : -1};
      }
      fn(GaussDiagram::from_endpoints(seq));
      return;
    }
    for (std::size_t j = i + 1; j < partner.size(); ++j) {
      if (partner[j] >= 0) continue;
      partner[i] = static_cast<int>(j);
      partner[j] = static_cast<int>(i);
      rec();
      partner[i] = partner[j] = -1;
    }
  };
  rec();
}

/// Linking read off the cyclic sequence: the two chords alternate iff their
/// endpoints, in order, read x y x y or y x y x.
inline bool ref_linked(const GaussDiagram& d, ChordId x, ChordId y) {
  if (x == y) return false;
  std::vector<ChordId> seen;
  for (const auto& e : d.endpoints())
    if (e.chord == x || e.chord == y) seen.push_back(e.chord);
  return seen.size() == 4 && seen[0] == seen[2] && seen[1] == seen[3];
}

inline bool ref_even(const GaussDiagram& d, ChordId c) {
  std::size_t n = 0;
  for (ChordId e = 0; e < d.chord_count(); ++e) n += ref_linked(d, c, e);
  return n % 2 == 0;
}

/// The word rules applied literally, walking the circle from arc `ref`.
inline FreeWord ref_word(const GaussDiagram& d, std::size_t ref) {
  FreeWord w;
  const std::size_t m = d.endpoint_count();
  for (std::size_t count = 1; count <= m; ++count) {
    const Endpoint& e = d.endpoint((ref - 1 + count - 1) % m + 1);
    if (ref_even(d, e.chord)) {
      w.push_back({Symbol::a, 1});
      continue;
    }
    std::size_t evens = 0;
    for (ChordId f = 0; f < d.chord_count(); ++f) evens += ref_linked(d, e.chord, f) && ref_even(d, f);
    bool primed = evens % 2 == 1;
    Symbol s = e.passage == Passage::Under ? (primed ? Symbol::bp : Symbol::b) : (primed ? Symbol::Bp : Symbol::B);
    w.push_back({s, count % 2 == 1 ? 1 : -1});
  }
  return w;
}

inline FreeWord power(const FreeWord& w, long k) {
  FreeWord out;
  const FreeWord unit = k >= 0 ? w : inverse(w);
  for (long i = 0; i < (k >= 0 ? k : -k); ++i) out = concat(out, unit);
  return out;
}

/// Random diagrams, about half with a planted triangle, keeping only those
/// with a nontrivial invariant.
inline std::vector<GaussDiagram> nontrivial_diagrams(std::size_t count, std::size_t max_chords, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GaussDiagram> out;
  for (std::size_t attempts = 0; out.size() < count; ++attempts) {
    if (attempts > 200000) throw std::runtime_error("no diagrams with nontrivial value found");
    std::size_t n = 2 + rng() % (max_chords - 1);
    GaussDiagram d = random_diagram(n, rng);
    if (rng() % 2) d = plant_triangle(d, rng);
    if (!invariant(d).trivial()) out.push_back(d);
  }
  return out;
}

inline std::vector<GaussDiagram> mixed_diagrams(std::size_t count, std::size_t max_chords, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GaussDiagram> out = nontrivial_diagrams(count / 2, max_chords, seed + 1);
  while (out.size() < count) {
    std::size_t n = rng() % (max_chords + 1);
    out.push_back(random_diagram(n, rng));
  }
  return out;
}


/// w with k random conjugates g r^(+-1) g^-1 of relators spliced in at random
/// places; equal to w in the group.
inline FreeWord with_relators(FreeWord w, std::size_t k, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t glen = rng() % 4;
    FreeWord g = random_word(glen, rng);
    std::size_t which = rng() % 5;
    FreeWord r = relators()[which];
    if (rng() % 2) r = inverse(r);
    FreeWord piece = concat(concat(g, r), inverse(g));
    std::size_t pos = rng() % (w.size() + 1);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), piece.begin(), piece.end());
  }
  return w;
}

}  // namespace support
