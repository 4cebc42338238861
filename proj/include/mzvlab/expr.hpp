#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "mzvlab/products.hpp"
#include "mzvlab/words.hpp"

namespace mzv {

// Expression grammar (whitespace separates tokens where needed):
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (op factor)*          op: '*' 'sh' 'sq' 'star' 'ooz' 'sqooz' 'o'
//   factor  := ['-'] [rational] atom | rational
//   atom    := word | composition | '(' expr ')'
//   word    := ('x0' | 'x1' | 'p' | 'y' | 'd' | 'z{' int '}')+ | '1'
//   composition := '(' int (',' int)* ')' | '()'
//
// Products bind tighter than + and -, and associate to the left.
//   '*'     quasi-shuffle (H2) / *_lambda (PY)
//   'sh'    shuffle (H2) / lambda-shuffle (PY, PDY)
//   'sq'    transferred product: tau with * on H2, tau_tilde with *_lambda on PY
//   'star'  star shuffle (H2)
//   'ooz'   OOZ quasi-shuffle (PY)
//   'sqooz' tau_tilde-transferred OOZ quasi-shuffle (PY)
//   'o'     Ihara contraction (PY)

struct ParseContext {
  Alphabet alphabet = Alphabet::PY;
  Rational lambda = 1;
};

Poly parse_expr(std::string_view text, const ParseContext& ctx);

/// "(k1,...,kn)" -> Composition. Throws ParseError.
Composition parse_composition(std::string_view text);

/// Accepts h/H2, H/PY, pdy/PDY.
Alphabet parse_alphabet(std::string_view name);

enum class WordFormat { Letters, Z, Auto };

/// Letters: "2 x0x1 - pyy". Z: "2 z{2} - z{1}z{0}" (every word must be
/// z-decodable). Auto: Z when every word is z-decodable, else letters.
std::string format_poly(const Poly& p, WordFormat format = WordFormat::Letters);

}  // namespace mzv
