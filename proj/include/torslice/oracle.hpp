#pragma once

// Bounded search prover for equalities in G', working on the raw presentation
// only. It shares nothing with the normal-form model beyond the Letter type
// and the relation table, and every Proved answer carries a trace of
// elementary rewrites that is replayed before it is returned.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "torslice/word.hpp"

namespace torslice {

/// One elementary rewrite. Pairs are either a free pair x x^-1 or the pair
/// a a (relation r1). Relation steps replace one side of r2..r5 by the other.
struct RewriteStep {
  enum class Kind { InsertPair, DeletePair, Relation };

  Kind kind = Kind::InsertPair;
  std::size_t position = 0;  // 0-based offset of the first affected letter
  Letter first;              // pair steps
  Letter second;
  int relation = 0;          // index into relations(), 1..4
  bool forward = true;       // lhs -> rhs

  bool operator==(const RewriteStep&) const = default;
};

class InvalidRewrite : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Applies one step; throws InvalidRewrite if it does not match.
FreeWord apply_step(const FreeWord& w, const RewriteStep& step);
FreeWord replay(FreeWord w, const std::vector<RewriteStep>& trace);
RewriteStep reverse_step(const RewriteStep& step);

/// "rule@position(direction)", e.g. "r2[a b -> b'^-1 a]@1(fwd)",
/// "free[b b^-1]@3(ins)". Positions print 1-based.
std::string format_step(const RewriteStep& step);
std::string format_trace(const std::vector<RewriteStep>& trace);

struct OracleLimits {
  std::size_t max_len = 16;
  std::size_t budget = 200000;
};

struct ProofResult {
  bool proved = false;
  std::vector<RewriteStep> trace;  // w1 -> w2 when proved
  std::size_t expanded = 0;
};

/// True when some homomorphism from G' to a small symmetric group sends w1
/// and w2 to different permutations, which proves w1 != w2. The homomorphisms
/// come from a seeded search and each one is checked on every relator.
bool separated_by_quotient(const FreeWord& w1, const FreeWord& w2);

/// Both words are first rewritten to the form u a^e with u free of a, by
/// moving every a to the right. Then a breadth-first search from both ends
/// runs over freely reduced a-free words, where one move replaces a piece of a
/// relator of the index-two subgroup (r4, r5 and their conjugates by a) by the
/// inverse of the remaining piece. Each such move is a lemma derived once from
/// the relations by an elementary search, and every trace is replayed down to
/// single relation steps and pair insertions before Proved is returned. Words
/// longer than max_len are pruned and at most `budget` words are expanded.
/// Pairs separated by the abelianisation or by separated_by_quotient are
/// answered Unknown at once. Unknown never means unequal.
ProofResult bfs_prove_equal(const FreeWord& w1, const FreeWord& w2, const OracleLimits& limits = {});

}  // namespace torslice
