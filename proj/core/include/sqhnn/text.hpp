#pragma once

#include <string>
#include <string_view>

#include "sqhnn/presentation.hpp"
#include "sqhnn/word.hpp"

// Text syntax shared by every module and the CLI.
//
//   word          := factor*            ("e" alone is the identity)
//   factor        := name | name^k      (k a nonzero integer)
//   presentation  := "<" name ("," name)* "|" [relation ("," relation)*] ">"
//   relation      := word | word "=" word        (u = v means u v^-1)
//   endomorphism  := name "->" word (sep name "->" word)*   sep: , ; newline
//
// Names are [A-Za-z_][A-Za-z0-9_']* and must not be "e".

namespace sqhnn {

Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

Endomorphism parse_endomorphism(std::string_view text);
std::string format_endomorphism(const Endomorphism& f);

}  // namespace sqhnn
