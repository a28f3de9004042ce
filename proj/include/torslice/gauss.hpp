#pragma once

// Gauss diagrams of knot diagrams drawn on the cylinder.
//
// A diagram is a cyclic sequence of 2n chord endpoints read from a fixed
// reference arc. Every chord has one Over and one Under endpoint and a single
// crossing sign. Endpoints and arcs are indexed from 1; arc k is the gap that
// precedes endpoint k, so arc 1 carries the reference point.
//
// The winding-number-0 hypothesis cannot be checked from a Gauss code; callers
// are responsible for it.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace torslice {

enum class Passage : unsigned char { Over, Under };
enum class Parity : unsigned char { Even, Odd };

/// Chords are numbered 0..n-1 in order of first appearance.
using ChordId = std::size_t;

struct Endpoint {
  ChordId chord = 0;
  Passage passage = Passage::Over;
  int sign = +1;

  bool operator==(const Endpoint&) const = default;
};

enum class DiagramErrorKind {
  BadToken,
  DuplicatePassage,
  UnmatchedChord,
  SignMismatch,
  UnknownChord,
  IndexOutOfRange,
};

std::string_view to_string(DiagramErrorKind kind);

struct DiagramIssue {
  DiagramErrorKind kind;
  std::string detail;  // offending label, token or index
};

/// Raised for malformed codes and bad chord / index arguments. A single parse
/// can report several issues at once.
class DiagramError : public std::runtime_error {
 public:
  explicit DiagramError(std::vector<DiagramIssue> issues);
  DiagramError(DiagramErrorKind kind, std::string detail)
      : DiagramError(std::vector<DiagramIssue>{{kind, std::move(detail)}}) {}

  const std::vector<DiagramIssue>& issues() const { return issues_; }
  bool has(DiagramErrorKind kind) const;

 private:
  std::vector<DiagramIssue> issues_;
};

/// A labelled endpoint, the raw material of a diagram before validation.
struct LabelledEndpoint {
  std::string label;
  Passage passage = Passage::Over;
  int sign = +1;
};

class GaussDiagram {
 public:
  GaussDiagram() = default;

  /// Validates and builds. Chord ids are reassigned in order of first
  /// appearance. Throws DiagramError listing every violated rule.
  static GaussDiagram from_endpoints(const std::vector<LabelledEndpoint>& seq);

  std::size_t chord_count() const { return labels_.size(); }
  std::size_t endpoint_count() const { return endpoints_.size(); }
  bool empty() const { return endpoints_.empty(); }

  const std::vector<Endpoint>& endpoints() const { return endpoints_; }
  /// 1-based access.
  const Endpoint& endpoint(std::size_t k) const;

  const std::string& label(ChordId c) const;
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws DiagramError(UnknownChord).
  ChordId chord(std::string_view label) const;
  std::optional<ChordId> find_chord(std::string_view label) const;

  /// 1-based positions of the chord's two endpoints, first < second.
  std::array<std::size_t, 2> ends(ChordId c) const;

  std::vector<LabelledEndpoint> labelled() const;

  bool operator==(const GaussDiagram&) const = default;

 private:
  std::vector<Endpoint> endpoints_;
  std::vector<std::string> labels_;
  std::vector<std::array<std::size_t, 2>> ends_;
};

/// Grammar: token := ("O"|"U") label ("+"|"-"), label alphanumeric, tokens
/// separated by optional whitespace or commas.
GaussDiagram parse_gauss_code(std::string_view text);

/// Canonical text: no separators, original labels.
std::string serialize(const GaussDiagram& d);

/// True iff the endpoints of c and e alternate around the circle. A chord is
/// never linked with itself.
bool linked(const GaussDiagram& d, ChordId c, ChordId e);

/// Even iff the chord is linked with an even number of chords.
Parity chord_parity(const GaussDiagram& d, ChordId c);

/// Parity of the number of even chords linked with c.
Parity even_link_parity(const GaussDiagram& d, ChordId c);

/// Parity of the 1-based count of endpoints from arc `ref` up to and
/// including endpoint k.
Parity position_parity(const GaussDiagram& d, std::size_t k, std::size_t ref);

/// Chord parities for every chord plus the even-link parities, computed in
/// one pass over the linking matrix.
struct ParityTable {
  std::vector<Parity> chord;
  std::vector<Parity> even_link;
};
ParityTable parity_table(const GaussDiagram& d);

/// d1's endpoints followed by d2's. d2's chords receive fresh numeric labels
/// above the largest numeric label of d1.
GaussDiagram connected_sum(const GaussDiagram& d1, const GaussDiagram& d2);

/// Smallest positive integer label larger than every numeric label in use.
std::string fresh_label(const GaussDiagram& d);

}  // namespace torslice
