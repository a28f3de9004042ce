#pragma once

// Consistency checks between the normal-form model and the presentation.
// Shared by the `selfcheck` subcommand and the test suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "torslice/oracle.hpp"
#include "torslice/word.hpp"

namespace torslice {

/// The 34-letter word read off the solid-torus knot of the RGB-link example.
const FreeWord& rgb_example_word();

/// Identities that justify the model, each to be derived from the relations
/// alone: st = ts and a x a = theta(x) for x in {b, B, b'}.
struct Identity {
  std::string name;
  FreeWord lhs;
  FreeWord rhs;
};
std::vector<Identity> model_identities();

/// Uniform random word over the ten letters a^(+-1), b^(+-1), ...
FreeWord random_word(std::size_t length, std::mt19937_64& rng);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> run_selfcheck(const OracleLimits& limits = {}, std::uint64_t seed = 7);

}  // namespace torslice
