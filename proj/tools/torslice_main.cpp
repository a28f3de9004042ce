// torslice: sliceness obstruction for knots in the solid torus, from Gauss
// codes.
//
// Exit status: 0 success, 2 input error, 3 property violation (fuzz or
// selfcheck), 1 internal error.

#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "torslice/report.hpp"

namespace {

using namespace torslice;

constexpr int kInputError = 2;
constexpr int kViolation = 3;

enum class Format { Human, Machine };

struct Options {
  Format format = Format::Human;
  std::size_t ref = 1;
  bool loose = false;
  OracleLimits limits;
  FuzzOptions fuzz;
};

void emit(const Options& o, const nlohmann::ordered_json& machine, const std::string& human) {
  std::cout << (o.format == Format::Machine ? render_machine(machine) : human);
}

int cmd_invariant(const Options& o, const std::string& code) {
  GaussDiagram d = parse_gauss_code(code);
  Report r = invariant_report(d, code, o.ref);
  emit(o, to_json(r), render_human(r));
  return 0;
}

int cmd_reduce(const Options& o, const std::string& text) {
  Report r = reduce_report(parse_word(text), text);
  emit(o, to_json(r), render_human(r));
  return 0;
}

int cmd_equal(const Options& o, const std::string& t1, const std::string& t2) {
  FreeWord w1 = parse_word(t1), w2 = parse_word(t2);
  bool eq = equal(w1, w2);
  ProofResult proof = bfs_prove_equal(w1, w2, o.limits);

  nlohmann::ordered_json j;
  j["command"] = "equal";
  j["words"] = {format_word(w1), format_word(w2)};
  j["normal_forms"] = {format_element(reduce_word(w1)), format_element(reduce_word(w2))};
  j["equal"] = eq;
  j["oracle"] = proof.proved ? "Proved" : "Unknown";
  j["expanded"] = proof.expanded;
  j["trace"] = nlohmann::ordered_json::array();
  for (const auto& s : proof.trace) j["trace"].push_back(format_step(s));

  std::string human = std::string("equal:  ") + (eq ? "true" : "false") + "\n" +
                      "oracle: " + (proof.proved ? "Proved" : "Unknown") + " (" +
                      std::to_string(proof.expanded) + " words expanded)\n";
  if (proof.proved && !proof.trace.empty()) human += "trace:  " + format_trace(proof.trace) + "\n";
  emit(o, j, human);
  // An oracle proof of an equality the model rejects is a model defect.
  return proof.proved && !eq ? kViolation : 0;
}

int cmd_orbit(const Options& o, const std::string& c1, const std::string& c2) {
  InvariantValue v1 = invariant(parse_gauss_code(c1));
  InvariantValue v2 = invariant(parse_gauss_code(c2));
  bool same = v1 == v2;
  nlohmann::ordered_json j;
  j["command"] = "orbit";
  j["inputs"] = {c1, c2};
  j["canonical_pairs"] = {to_json(v1), to_json(v2)};
  j["same"] = same;
  emit(o, j,
       render_human(v1) + "\n" + render_human(v2) + "\n" + "same: " + (same ? "true" : "false") + "\n");
  return 0;
}

int cmd_fuzz(Options o) {
  o.fuzz.strictness = o.loose ? Strictness::Loose : Strictness::Strict;
  auto trials = run_fuzz(o.fuzz);
  std::size_t failed = 0;
  std::string human;
  for (const auto& t : trials) {
    failed += !t.pass;
    human += "seed " + std::to_string(t.seed) + " " + (t.pass ? "pass" : "FAIL") + " " +
             (t.initial_code.empty() ? "(unknot)" : t.initial_code) + " moves=" +
             std::to_string(t.moves.size()) + " " + render_human(t.initial) + " -> " +
             render_human(t.final) + "\n";
  }
  human += std::to_string(trials.size() - failed) + "/" + std::to_string(trials.size()) +
           " trials preserved the invariant (seed " + std::to_string(o.fuzz.seed) + ")\n";
  emit(o, fuzz_json(trials, o.fuzz), human);
  return failed == 0 ? 0 : kViolation;
}

int cmd_selfcheck(const Options& o) {
  auto checks = run_selfcheck(o.limits);
  bool all = true;
  std::string human;
  for (const auto& c : checks) {
    all &= c.pass;
    human += std::string(c.pass ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]") + "\n";
  }
  emit(o, selfcheck_json(checks), human);
  return all ? 0 : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sliceness obstruction for knots in the solid torus"};
  app.require_subcommand(1);

  Options o;
  o.fuzz.threads = std::max(1u, std::thread::hardware_concurrency());
  std::map<std::string, Format> formats{{"human", Format::Human}, {"machine", Format::Machine}};
  app.add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::string a1, a2;

  auto* inv = app.add_subcommand("invariant", "Word, normal form and invariant of a Gauss code");
  inv->add_option("code", a1, "Gauss code, e.g. O1+U2+O3+U1+O2+U3+")->required();
  inv->add_option("--ref", o.ref, "Reference arc (1-based)")->check(CLI::PositiveNumber);

  auto* red = app.add_subcommand("reduce", "Normal form and class of a letter word");
  red->add_option("word", a1, "Word, e.g. \"B' B^-1 b' b^-1\"")->required();

  auto* eq = app.add_subcommand("equal", "Decide equality of two words, with an oracle proof attempt");
  eq->add_option("word1", a1)->required();
  eq->add_option("word2", a2)->required();

  auto* orb = app.add_subcommand("orbit", "Compare the invariants of two Gauss codes");
  orb->add_option("code1", a1)->required();
  orb->add_option("code2", a2)->required();

  auto* fuzz = app.add_subcommand("fuzz", "Random Reidemeister walks; fails if the invariant changes");
  fuzz->add_option("--trials", o.fuzz.trials);
  fuzz->add_option("--max-chords", o.fuzz.max_chords);
  fuzz->add_option("--steps", o.fuzz.max_steps, "Maximum walk length");
  fuzz->add_option("--seed", o.fuzz.seed);
  fuzz->add_option("--threads", o.fuzz.threads);
  fuzz->add_flag("--loose", o.loose, "Drop sign checks on R2 moves");

  auto* self = app.add_subcommand("selfcheck", "Model versus presentation consistency checks");

  for (auto* sub : {eq, self}) {
    sub->add_option("--max-len", o.limits.max_len, "Oracle word length bound");
    sub->add_option("--budget", o.limits.budget, "Oracle expansion budget");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*inv) return cmd_invariant(o, a1);
    if (*red) return cmd_reduce(o, a1);
    if (*eq) return cmd_equal(o, a1, a2);
    if (*orb) return cmd_orbit(o, a1, a2);
    if (*fuzz) return cmd_fuzz(o);
    if (*self) return cmd_selfcheck(o);
  } catch (const DiagramError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const WordSyntaxError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
