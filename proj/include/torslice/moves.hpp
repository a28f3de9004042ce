#pragma once

// Reidemeister moves on Gauss diagrams, move enumeration and seeded random
// walks used to fuzz the invariant.
//
// Insertion slots are numbered 1..2n+1: slot k places new endpoints directly
// before current endpoint k, slot 2n+1 appends them after the last endpoint.
// A site is a pair of adjacent endpoints (k, k+1) named by k; sites never wrap
// around the reference point.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "torslice/gauss.hpp"
#include "torslice/group.hpp"

namespace torslice {

enum class Interleaving { Parallel, Antiparallel };
enum class OverStrand { First, Second };

struct R1Insert {
  std::size_t slot = 1;
  Passage first = Passage::Over;  // passage of the earlier endpoint
  int sign = +1;
  std::string label;  // empty: a fresh numeric label
  bool operator==(const R1Insert&) const = default;
};

struct R1Delete {
  std::string label;
  bool operator==(const R1Delete&) const = default;
};

/// Adds chords c (sign `sign`) and d (sign -sign). The pair at slot1 reads
/// (c, d); the pair at slot2 reads (c, d) when Parallel, (d, c) when
/// Antiparallel. The over strand carries both Over endpoints.
struct R2Insert {
  std::size_t slot1 = 1;
  std::size_t slot2 = 1;
  Interleaving interleaving = Interleaving::Parallel;
  OverStrand over = OverStrand::First;
  int sign = +1;
  std::string label_c;
  std::string label_d;
  bool operator==(const R2Insert&) const = default;
};

struct R2Delete {
  std::string label_c;
  std::string label_d;
  bool operator==(const R2Delete&) const = default;
};

/// Three disjoint sites occupied by chords x, y, z so that every two sites
/// share exactly one chord, with one site carrying two Over endpoints (the
/// top strand). Applying the move swaps the endpoints inside each site.
struct R3 {
  std::size_t site_a = 1;
  std::size_t site_b = 3;
  std::size_t site_c = 5;
  bool operator==(const R3&) const = default;
};

using MoveDescriptor = std::variant<R1Insert, R1Delete, R2Insert, R2Delete, R3>;

std::string describe(const MoveDescriptor& m);

/// Strict moves require opposite signs on R2 chord pairs; Loose drops that.
enum class Strictness { Strict, Loose };

class MoveNotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws MoveNotApplicable naming the failed condition.
GaussDiagram apply(const GaussDiagram& d, const MoveDescriptor& m,
                   Strictness strictness = Strictness::Strict);

/// The move undoing m on d (m must be applicable to d).
MoveDescriptor inverse_move(const GaussDiagram& d, const MoveDescriptor& m,
                            Strictness strictness = Strictness::Strict);

/// All applicable moves. Inserts are listed for slots 1..min(2n+1, insert_cap).
std::vector<MoveDescriptor> enumerate_moves(const GaussDiagram& d,
                                            std::size_t insert_cap = std::numeric_limits<std::size_t>::max(),
                                            Strictness strictness = Strictness::Strict);

struct Walk {
  GaussDiagram result;
  std::vector<MoveDescriptor> moves;
};

/// Deterministic in (d, steps, seed). Each step first picks a move family
/// uniformly among those with an applicable move, then a move within it.
Walk random_walk_traced(const GaussDiagram& d, std::size_t steps, std::uint64_t seed,
                        Strictness strictness = Strictness::Strict);
GaussDiagram random_walk(const GaussDiagram& d, std::size_t steps, std::uint64_t seed,
                         Strictness strictness = Strictness::Strict);

/// Random Gauss diagram with chords labelled 1..chords. Arbitrary chord
/// placements are allowed; the diagram need not be planar.
GaussDiagram random_diagram(std::size_t chords, std::mt19937_64& rng);

/// Inserts a braid-type triangle (an R3 configuration) into d with randomly
/// chosen slots, strand roles, site orders and signs.
GaussDiagram plant_triangle(const GaussDiagram& d, std::mt19937_64& rng);

struct FuzzTrial {
  std::uint64_t seed = 0;
  std::string initial_code;
  std::vector<std::string> moves;
  InvariantValue initial;
  InvariantValue final;
  bool pass = false;
};

struct FuzzOptions {
  std::size_t trials = 1000;
  std::size_t max_chords = 12;
  std::size_t max_steps = 20;
  std::uint64_t seed = 1;
  Strictness strictness = Strictness::Strict;
  unsigned threads = 1;
};

/// Trial i uses seed options.seed + i. Results come back in trial order.
std::vector<FuzzTrial> run_fuzz(const FuzzOptions& options);

}  // namespace torslice
