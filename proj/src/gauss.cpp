#include "torslice/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_map>

namespace torslice {

std::string_view to_string(DiagramErrorKind kind) {
  switch (kind) {
    case DiagramErrorKind::BadToken: return "BadToken";
    case DiagramErrorKind::DuplicatePassage: return "DuplicatePassage";
    case DiagramErrorKind::UnmatchedChord: return "UnmatchedChord";
    case DiagramErrorKind::SignMismatch: return "SignMismatch";
    case DiagramErrorKind::UnknownChord: return "UnknownChord";
    case DiagramErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "?";
}

namespace {

std::string describe(const std::vector<DiagramIssue>& issues) {
  std::string msg;
  for (const auto& issue : issues) {
    if (!msg.empty()) msg += "; ";
    msg += to_string(issue.kind);
    msg += "(" + issue.detail + ")";
  }
  return msg;
}

}  // namespace

DiagramError::DiagramError(std::vector<DiagramIssue> issues)
    : std::runtime_error(describe(issues)), issues_(std::move(issues)) {}

bool DiagramError::has(DiagramErrorKind kind) const {
  return std::any_of(issues_.begin(), issues_.end(),
                     [kind](const DiagramIssue& i) { return i.kind == kind; });
}

GaussDiagram GaussDiagram::from_endpoints(const std::vector<LabelledEndpoint>& seq) {
  GaussDiagram d;
  std::unordered_map<std::string, ChordId> ids;
  std::vector<std::vector<std::size_t>> occurrences;

  d.endpoints_.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& le = seq[i];
    auto [it, inserted] = ids.try_emplace(le.label, d.labels_.size());
    if (inserted) {
      d.labels_.push_back(le.label);
      occurrences.emplace_back();
    }
    occurrences[it->second].push_back(i);
    d.endpoints_.push_back({it->second, le.passage, le.sign});
  }

  std::vector<DiagramIssue> issues;
  for (ChordId c = 0; c < d.labels_.size(); ++c) {
    const auto& occ = occurrences[c];
    const auto& label = d.labels_[c];
    if (occ.size() == 1) {
      issues.push_back({DiagramErrorKind::UnmatchedChord, label});
      continue;
    }
    std::size_t overs = 0;
    for (auto i : occ) overs += seq[i].passage == Passage::Over;
    if (overs != 1 || occ.size() - overs != 1)
      issues.push_back({DiagramErrorKind::DuplicatePassage, label});
    bool same_sign = std::all_of(occ.begin(), occ.end(),
                                 [&](std::size_t i) { return seq[i].sign == seq[occ[0]].sign; });
    if (!same_sign) issues.push_back({DiagramErrorKind::SignMismatch, label});
    if (occ.size() == 2) d.ends_.push_back({occ[0] + 1, occ[1] + 1});
  }
  if (!issues.empty()) throw DiagramError(std::move(issues));
  return d;
}

const Endpoint& GaussDiagram::endpoint(std::size_t k) const {
  if (k < 1 || k > endpoints_.size())
    throw DiagramError(DiagramErrorKind::IndexOutOfRange, std::to_string(k));
  return endpoints_[k - 1];
}

const std::string& GaussDiagram::label(ChordId c) const {
  if (c >= labels_.size())
    throw DiagramError(DiagramErrorKind::UnknownChord, "#" + std::to_string(c));
  return labels_[c];
}

std::optional<ChordId> GaussDiagram::find_chord(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<ChordId>(it - labels_.begin());
}

ChordId GaussDiagram::chord(std::string_view label) const {
  if (auto c = find_chord(label)) return *c;
  throw DiagramError(DiagramErrorKind::UnknownChord, std::string(label));
}

std::array<std::size_t, 2> GaussDiagram::ends(ChordId c) const {
  if (c >= ends_.size())
    throw DiagramError(DiagramErrorKind::UnknownChord, "#" + std::to_string(c));
  return ends_[c];
}

std::vector<LabelledEndpoint> GaussDiagram::labelled() const {
  std::vector<LabelledEndpoint> out;
  out.reserve(endpoints_.size());
  for (const auto& e : endpoints_) out.push_back({labels_[e.chord], e.passage, e.sign});
  return out;
}

GaussDiagram parse_gauss_code(std::string_view text) {
  std::vector<LabelledEndpoint> seq;
  std::size_t i = 0;
  auto bad = [&](std::size_t at) {
    return DiagramError(DiagramErrorKind::BadToken,
                        "at offset " + std::to_string(at) + ": '" +
                            std::string(text.substr(at, 8)) + "'");
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ch != 'O' && ch != 'U') throw bad(start);
    LabelledEndpoint le;
    le.passage = ch == 'O' ? Passage::Over : Passage::Under;
    ++i;
    std::size_t label_start = i;
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    if (i == label_start || i == text.size() || (text[i] != '+' && text[i] != '-'))
      throw bad(start);
    le.label = std::string(text.substr(label_start, i - label_start));
    le.sign = text[i] == '+' ? +1 : -1;
    ++i;
    seq.push_back(std::move(le));
  }
  return GaussDiagram::from_endpoints(seq);
}

std::string serialize(const GaussDiagram& d) {
  std::string out;
  for (const auto& e : d.endpoints()) {
    out += e.passage == Passage::Over ? 'O' : 'U';
    out += d.label(e.chord);
    out += e.sign > 0 ? '+' : '-';
  }
  return out;
}

bool linked(const GaussDiagram& d, ChordId c, ChordId e) {
  auto [c1, c2] = d.ends(c);
  auto [e1, e2] = d.ends(e);
  if (c == e) return false;
  bool in1 = c1 < e1 && e1 < c2;
  bool in2 = c1 < e2 && e2 < c2;
  return in1 != in2;
}

namespace {

Parity parity_of(std::size_t count) { return count % 2 == 0 ? Parity::Even : Parity::Odd; }

}  // namespace

Parity chord_parity(const GaussDiagram& d, ChordId c) {
  d.ends(c);
  std::size_t count = 0;
  for (ChordId e = 0; e < d.chord_count(); ++e) count += linked(d, c, e);
  return parity_of(count);
}

Parity even_link_parity(const GaussDiagram& d, ChordId c) {
  d.ends(c);
  std::size_t count = 0;
  for (ChordId e = 0; e < d.chord_count(); ++e)
    if (linked(d, c, e) && chord_parity(d, e) == Parity::Even) ++count;
  return parity_of(count);
}

ParityTable parity_table(const GaussDiagram& d) {
  const std::size_t n = d.chord_count();
  std::vector<std::vector<ChordId>> neighbours(n);
  for (ChordId c = 0; c < n; ++c)
    for (ChordId e = c + 1; e < n; ++e)
      if (linked(d, c, e)) {
        neighbours[c].push_back(e);
        neighbours[e].push_back(c);
      }
  ParityTable t;
  t.chord.resize(n);
  t.even_link.resize(n);
  for (ChordId c = 0; c < n; ++c) t.chord[c] = parity_of(neighbours[c].size());
  for (ChordId c = 0; c < n; ++c) {
    auto evens = std::count_if(neighbours[c].begin(), neighbours[c].end(),
                               [&](ChordId e) { return t.chord[e] == Parity::Even; });
    t.even_link[c] = parity_of(static_cast<std::size_t>(evens));
  }
  return t;
}

Parity position_parity(const GaussDiagram& d, std::size_t k, std::size_t ref) {
  const std::size_t m = d.endpoint_count();
  if (k < 1 || k > m) throw DiagramError(DiagramErrorKind::IndexOutOfRange, std::to_string(k));
  if (ref < 1 || ref > m) throw DiagramError(DiagramErrorKind::IndexOutOfRange, "arc " + std::to_string(ref));
  std::size_t count = (k + m - ref) % m + 1;
  return parity_of(count);
}

namespace {

std::optional<unsigned long long> numeric(const std::string& label) {
  unsigned long long v = 0;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), v);
  if (ec != std::errc() || ptr != label.data() + label.size()) return std::nullopt;
  return v;
}

}  // namespace

std::string fresh_label(const GaussDiagram& d) {
  unsigned long long top = 0;
  for (const auto& l : d.labels())
    if (auto v = numeric(l)) top = std::max(top, *v);
  return std::to_string(top + 1);
}

GaussDiagram connected_sum(const GaussDiagram& d1, const GaussDiagram& d2) {
  auto seq = d1.labelled();
  unsigned long long next = std::stoull(fresh_label(d1));
  std::vector<std::string> renamed(d2.chord_count());
  for (ChordId c = 0; c < d2.chord_count(); ++c) {
    while (d1.find_chord(std::to_string(next))) ++next;
    renamed[c] = std::to_string(next++);
  }
  for (const auto& e : d2.endpoints()) seq.push_back({renamed[e.chord], e.passage, e.sign});
  return GaussDiagram::from_endpoints(seq);
}

}  // namespace torslice
