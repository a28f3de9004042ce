#include "torslice/word.hpp"

#include <algorithm>
#include <cctype>

namespace torslice {

FreeWord parse_word(std::string_view text) {
  FreeWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    Letter l;
    bool prime = i + 1 < text.size() && text[i + 1] == '\'';
    switch (ch) {
      case 'a':
        if (prime) throw WordSyntaxError(start, "a has no primed form");
        l.symbol = Symbol::a;
        break;
      case 'b': l.symbol = prime ? Symbol::bp : Symbol::b; break;
      case 'B': l.symbol = prime ? Symbol::Bp : Symbol::B; break;
      default: throw WordSyntaxError(start, std::string("unexpected '") + ch + "'");
    }
    i += prime ? 2 : 1;
    if (i < text.size() && text[i] == '^') {
      std::string_view rest = text.substr(i + 1);
      if (rest.starts_with("-1")) {
        l.exponent = -1;
        i += 3;
      } else if (rest.starts_with("{-1}")) {
        l.exponent = -1;
        i += 5;
      } else if (rest.starts_with("1")) {
        i += 2;
      } else {
        throw WordSyntaxError(i, "exponent must be 1 or -1");
      }
    }
    w.push_back(l);
  }
  return w;
}

std::string format_letter(Letter l) {
  static constexpr std::string_view names[] = {"a", "b", "b'", "B", "B'"};
  std::string s(names[static_cast<int>(l.symbol)]);
  if (l.exponent < 0) s += "^-1";
  return s;
}

std::string format_word(const FreeWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
  FreeWord w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

FreeWord psi(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back(l.inverse());
  return out;
}

FreeWord phi(const FreeWord& w) {
  FreeWord out = psi(w);
  if (!out.empty()) std::rotate(out.begin(), out.begin() + 1, out.end());
  return out;
}

FreeWord normalize_a(const FreeWord& w) {
  FreeWord out = w;
  for (auto& l : out)
    if (l.symbol == Symbol::a) l.exponent = +1;
  return out;
}

FreeWord build_word(const GaussDiagram& d) { return build_word_at(d, 1); }

FreeWord build_word_at(const GaussDiagram& d, std::size_t ref) {
  const std::size_t m = d.endpoint_count();
  if (ref < 1 || ref > std::max<std::size_t>(m, 1))
    throw DiagramError(DiagramErrorKind::IndexOutOfRange, "arc " + std::to_string(ref));
  FreeWord w;
  if (m == 0) return w;
  const auto parity = parity_table(d);
  w.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    // i + 1 is the 1-based position counted from the reference arc
    const Endpoint& e = d.endpoints()[(ref - 1 + i) % m];
    if (parity.chord[e.chord] == Parity::Even) {
      w.push_back({Symbol::a, +1});
      continue;
    }
    bool primed = parity.even_link[e.chord] == Parity::Odd;
    Symbol s = e.passage == Passage::Under ? (primed ? Symbol::bp : Symbol::b)
                                           : (primed ? Symbol::Bp : Symbol::B);
    w.push_back({s, (i % 2 == 0) ? +1 : -1});
  }
  return w;
}

}  // namespace torslice
