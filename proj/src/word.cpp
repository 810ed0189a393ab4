#include "fcd/word.hpp"

#include <cctype>

#include "fcd/errors.hpp"

namespace fcd {

std::string format_word(const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  out += ']';
  return out;
}

Word parse_word(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') throw ParseError(pos, "expected '['");
  ++pos;
  Word w;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      skip_ws();
      bool neg = pos < text.size() && text[pos] == '-';
      if (neg) ++pos;
      std::size_t start = pos;
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw ParseError(pos, "letter out of range");
        ++pos;
      }
      if (pos == start) throw ParseError(pos, "expected integer");
      w.push_back(static_cast<Letter>(neg ? -value : value));
      skip_ws();
      if (pos >= text.size()) throw ParseError(pos, "unterminated word");
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      if (text[pos] != ',') throw ParseError(pos, "expected ',' or ']'");
      ++pos;
    }
  }
  skip_ws();
  if (pos != text.size()) throw ParseError(pos, "trailing characters");
  return w;
}

}  // namespace fcd
