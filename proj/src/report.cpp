#include "torslice/report.hpp"

namespace torslice {

namespace {

void fill_algebra(Report& r) {
  r.normal_form = reduce_word(r.word);
  r.trivial = r.normal_form.is_identity();
  if (!r.normal_form.a_flag) {
    r.pair = invariant_of_word(r.word);
    r.z2 = z2_coords(canon_class(r.normal_form));
  }
  r.verdict = r.trivial ? Verdict::Inconclusive : Verdict::NotSlice;
}

}  // namespace

Report invariant_report(const GaussDiagram& d, std::string input, std::size_t ref) {
  Report r;
  r.command = "invariant";
  r.input = std::move(input);
  r.ref = ref;
  r.word = build_word_at(d, ref);
  fill_algebra(r);
  return r;
}

Report reduce_report(const FreeWord& w, std::string input) {
  Report r;
  r.command = "reduce";
  r.input = std::move(input);
  r.word = w;
  fill_algebra(r);
  return r;
}

nlohmann::ordered_json to_json(const InvariantValue& v) {
  return nlohmann::ordered_json::array({v.first.text(), v.second.text()});
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["input"] = r.input;
  if (r.ref) j["ref"] = *r.ref;
  j["word"] = format_word(r.word);
  j["normal_form"] = {{"syllables", format_syllables(r.normal_form.h)}, {"a", r.normal_form.a_flag ? 1 : 0}};
  j["canonical_pair"] = r.pair ? to_json(*r.pair) : nlohmann::ordered_json(nullptr);
  if (r.z2) {
    nlohmann::ordered_json z;
    z["raw"] = {r.z2->raw_k, r.z2->raw_l};
    z["basis"] = r.z2->basis ? nlohmann::ordered_json{r.z2->basis->first, r.z2->basis->second}
                             : nlohmann::ordered_json(nullptr);
    j["z2"] = z;
  } else {
    j["z2"] = nullptr;
  }
  j["trivial"] = r.trivial;
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

nlohmann::ordered_json fuzz_json(const std::vector<FuzzTrial>& trials, const FuzzOptions& options) {
  nlohmann::ordered_json j;
  j["command"] = "fuzz";
  j["seed"] = options.seed;
  j["max_chords"] = options.max_chords;
  j["max_steps"] = options.max_steps;
  j["strict"] = options.strictness == Strictness::Strict;
  std::size_t failed = 0;
  auto list = nlohmann::ordered_json::array();
  for (const auto& t : trials) {
    nlohmann::ordered_json rec;
    rec["seed"] = t.seed;
    rec["initial"] = t.initial_code;
    rec["moves"] = t.moves;
    rec["initial_pair"] = to_json(t.initial);
    rec["final_pair"] = to_json(t.final);
    rec["pass"] = t.pass;
    failed += !t.pass;
    list.push_back(std::move(rec));
  }
  j["trials"] = std::move(list);
  j["passed"] = trials.size() - failed;
  j["failed"] = failed;
  return j;
}

nlohmann::ordered_json selfcheck_json(const std::vector<CheckResult>& checks) {
  nlohmann::ordered_json j;
  j["command"] = "selfcheck";
  auto list = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    all &= c.pass;
  }
  j["checks"] = std::move(list);
  j["pass"] = all;
  return j;
}

std::string render_machine(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string render_human(const InvariantValue& v) {
  auto show = [](const CanonicalClass& c) { return c.empty() ? std::string("1") : c.text(); };
  return "{" + show(v.first) + ", " + show(v.second) + "}";
}

std::string render_human(const Report& r) {
  std::string out;
  out += "input:       " + r.input + "\n";
  if (r.ref) out += "reference:   arc " + std::to_string(*r.ref) + "\n";
  out += "word:        " + (r.word.empty() ? std::string("(empty)") : format_word(r.word)) + "\n";
  out += "normal form: " + format_element(r.normal_form) + "\n";
  out += "canonical:   " + (r.pair ? render_human(*r.pair) : std::string("n/a (odd number of a)")) + "\n";
  out += "z2:          ";
  if (!r.z2) {
    out += "not in the Z+Z subgroup\n";
  } else {
    out += "raw (" + std::to_string(r.z2->raw_k) + "," + std::to_string(r.z2->raw_l) + ")";
    if (r.z2->basis)
      out += ", (B'B^-1)^" + std::to_string(r.z2->basis->first) + " (b'b^-1)^" +
             std::to_string(r.z2->basis->second);
    else
      out += ", outside the span of B'B^-1 and b'b^-1";
    out += "\n";
  }
  out += std::string("trivial:     ") + (r.trivial ? "yes" : "no") + "\n";
  out += "verdict:     " + std::string(to_string(r.verdict)) + "\n";
  return out;
}

}  // namespace torslice
