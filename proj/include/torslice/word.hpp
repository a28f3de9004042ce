#pragma once

// Letter words over {a, b, b', B, B'} and the rules that read such a word off
// a Gauss diagram.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "torslice/gauss.hpp"

namespace torslice {

/// b/bp are the under-crossing letters, B/Bp the over-crossing ones; the
/// primed variants mark chords linked with oddly many even chords.
enum class Symbol : unsigned char { a, b, bp, B, Bp };

struct Letter {
  Symbol symbol = Symbol::a;
  int exponent = +1;

  Letter inverse() const { return {symbol, -exponent}; }
  bool operator==(const Letter&) const = default;
};

using FreeWord = std::vector<Letter>;

class WordSyntaxError : public std::runtime_error {
 public:
  WordSyntaxError(std::size_t offset, const std::string& what)
      : std::runtime_error("BadLetter at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Accepts a, b, b', B, B' each optionally followed by ^-1, ^{-1} or ^1, with
/// optional whitespace. Throws WordSyntaxError.
FreeWord parse_word(std::string_view text);

/// Whitespace separated, e.g. "B' a B' B^-1 b'". The empty word prints as "".
std::string format_word(const FreeWord& w);
std::string format_letter(Letter l);

FreeWord concat(const FreeWord& u, const FreeWord& v);
/// Word for the inverse element: reversed order, every exponent flipped.
FreeWord inverse(const FreeWord& w);
/// Exponent flip of every letter, order kept.
FreeWord psi(const FreeWord& w);
/// Reference shift: first letter moved to the end, every exponent flipped.
FreeWord phi(const FreeWord& w);
/// Rewrites a^-1 as a.
FreeWord normalize_a(const FreeWord& w);

/// Word read from arc 1.
FreeWord build_word(const GaussDiagram& d);
/// Word read from arc `ref`, with positions counted from it. Throws
/// DiagramError(IndexOutOfRange) unless 1 <= ref <= max(2n, 1).
FreeWord build_word_at(const GaussDiagram& d, std::size_t ref);

}  // namespace torslice
