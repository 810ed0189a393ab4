#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fcd {

// A generator index s_i is stored as the plain integer i (1-based).
using Letter = int;

// A word in the generators, e.g. {2,1,3} for s2 s1 s3.  The empty word is
// the identity.
using Word = std::vector<Letter>;

// "[2,1,3,4]"; the empty word renders as "[]".
std::string format_word(const Word& w);

// Inverse of format_word.  Also accepts surrounding whitespace and spaces
// after commas.  Throws ParseError on malformed input.
Word parse_word(std::string_view text);

}  // namespace fcd
