#include "mzvlab/expr.hpp"

#include <algorithm>
#include <cctype>

#include "mzvlab/maps.hpp"

namespace mzv {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const ParseContext& ctx) : s_(text), ctx_(ctx) {}

  Poly parse() {
    Poly out = expr();
    skip_ws();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "', expected operator or end");
    return out;
  }

  Composition composition_only() {
    skip_ws();
    Composition c = composition();
    skip_ws();
    if (i_ != s_.size()) fail("trailing input after composition");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool at(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }

  // --- operators ---

  std::string peek_op() {
    skip_ws();
    if (i_ >= s_.size()) return {};
    if (s_[i_] == '*') return "*";
    std::size_t j = i_;
    while (j < s_.size() && std::islower(static_cast<unsigned char>(s_[j]))) ++j;
    const std::string word(s_.substr(i_, j - i_));
    for (const char* op : {"sqooz", "sq", "sh", "star", "ooz", "o"}) {
      if (word == op) return word;
    }
    return {};
  }

  Poly apply(const std::string& op, const Poly& a, const Poly& b, std::size_t pos) {
    const Alphabet al = ctx_.alphabet;
    const Rational& lam = ctx_.lambda;
    auto need = [&](Alphabet want) {
      if (al != want) {
        throw ParseError("operator '" + op + "' needs alphabet " + std::string(alphabet_name(want)), pos);
      }
    };
    if (op == "*") {
      if (al == Alphabet::H2) return quasi_shuffle(a, b);
      need(Alphabet::PY);
      return quasi_shuffle_lambda(a, b, lam);
    }
    if (op == "sh") {
      if (al == Alphabet::H2) return shuffle(a, b);
      if (al == Alphabet::PDY) return shuffle_lambda_pdy(a, b, lam);
      return shuffle_lambda_py(a, b, lam);
    }
    if (op == "sq") {
      if (al == Alphabet::H2) return transferred_product(quasi_shuffle, tau_poly, tau_poly, a, b);
      need(Alphabet::PY);
      const BilinearMap base = [lam](const Poly& u, const Poly& v) { return quasi_shuffle_lambda(u, v, lam); };
      return transferred_product(base, tau_tilde_poly, tau_tilde_poly, a, b);
    }
    if (op == "star") {
      need(Alphabet::H2);
      return shuffle_star(a, b);
    }
    if (op == "ooz") {
      need(Alphabet::PY);
      return ooz_quasi_shuffle(a, b);
    }
    if (op == "sqooz") {
      need(Alphabet::PY);
      return ooz_square(a, b);
    }
    need(Alphabet::PY);
    return ihara_circ(a, b);
  }

  // --- grammar ---

  Poly expr() {
    Poly out = term();
    for (;;) {
      skip_ws();
      if (at('+')) {
        ++i_;
        out += term();
      } else if (at('-')) {
        ++i_;
        out -= term();
      } else {
        return out;
      }
    }
  }

  Poly term() {
    Poly out = factor();
    for (;;) {
      const std::string op = peek_op();
      if (op.empty()) return out;
      const std::size_t pos = i_;
      i_ += op.size();
      const Poly rhs = factor();
      try {
        out = apply(op, out, rhs, pos);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what(), pos);
      }
    }
  }

  bool atom_starts() {
    skip_ws();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    if (c == '(') return true;
    if (c == 'x' || c == 'p' || c == 'y' || c == 'd' || c == 'z') return !peek_is_operator();
    return false;
  }

  bool peek_is_operator() { return !peek_op().empty(); }

  Poly factor() {
    skip_ws();
    Rational coef = 1;
    if (at('-')) {
      ++i_;
      coef = -1;
    } else if (at('+')) {
      ++i_;
    }
    skip_ws();
    if (i_ < s_.size() && is_digit(s_[i_])) {
      const Rational r = rational();
      if (!atom_starts()) return Poly::unit(ctx_.alphabet) * (coef * r);
      coef *= r;
    }
    if (!atom_starts()) fail(i_ >= s_.size() ? "unexpected end of input, expected a word"
                                              : "unexpected '" + std::string(1, s_[i_]) + "', expected a word");
    return atom() * coef;
  }

  Rational rational() {
    const std::size_t start = i_;
    while (i_ < s_.size() && is_digit(s_[i_])) ++i_;
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      if (i_ >= s_.size() || !is_digit(s_[i_])) fail("expected denominator");
      while (i_ < s_.size() && is_digit(s_[i_])) ++i_;
    }
    try {
      return parse_rational(s_.substr(start, i_ - start));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
  }

  Poly atom() {
    skip_ws();
    if (s_[i_] == '(') {
      if (looks_like_composition()) return encode(composition());
      ++i_;
      Poly inner = expr();
      if (!at(')')) fail("expected ')'");
      ++i_;
      return inner;
    }
    return word();
  }

  bool looks_like_composition() const {
    std::size_t j = i_ + 1;
    auto ws = [&] {
      while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
    };
    ws();
    if (j < s_.size() && s_[j] == ')') return true;
    if (j < s_.size() && s_[j] == '-') ++j;
    if (j >= s_.size() || !is_digit(s_[j])) return false;
    while (j < s_.size() && is_digit(s_[j])) ++j;
    ws();
    return j < s_.size() && (s_[j] == ',' || s_[j] == ')');
  }

  int integer() {
    skip_ws();
    const std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    if (i_ >= s_.size() || !is_digit(s_[i_])) fail("expected integer");
    while (i_ < s_.size() && is_digit(s_[i_])) ++i_;
    try {
      return std::stoi(std::string(s_.substr(start, i_ - start)));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", start);
    }
  }

  Composition composition() {
    if (!at('(')) fail("expected '('");
    ++i_;
    Composition c;
    if (at(')')) {
      ++i_;
      return c;
    }
    for (;;) {
      c.parts.push_back(integer());
      if (at(',')) {
        ++i_;
        continue;
      }
      if (at(')')) {
        ++i_;
        return c;
      }
      fail("expected ',' or ')' in composition");
    }
  }

  Poly encode(const Composition& c) {
    const std::size_t pos = i_;
    try {
      if (ctx_.alphabet == Alphabet::H2) return Poly(z_encode(c, ZTarget::H2));
      const Word w = z_encode(c, ZTarget::PY);
      return Poly(Word(ctx_.alphabet, w.letters()));
    } catch (const Error& e) {
      throw ParseError(e.what(), pos);
    }
  }

  Poly word() {
    const Alphabet a = ctx_.alphabet;
    std::string letters;
    const std::size_t start = i_;
    auto letter = [&](Letter l, std::size_t pos) {
      if (!is_letter_of(a, l)) throw ParseError("letter not in alphabet " + std::string(alphabet_name(a)), pos);
      letters.push_back(l);
    };
    while (i_ < s_.size()) {
      const char c = s_[i_];
      const std::size_t pos = i_;
      if (c == 'x' && i_ + 1 < s_.size() && (s_[i_ + 1] == '0' || s_[i_ + 1] == '1')) {
        if (a != Alphabet::H2) throw ParseError("x-letters need alphabet H2", pos);
        letters.push_back(s_[i_ + 1] == '0' ? kX0 : kX1);
        i_ += 2;
      } else if (c == 'z' && i_ + 1 < s_.size() && s_[i_ + 1] == '{') {
        i_ += 2;
        const int k = integer();
        if (!at('}')) fail("expected '}'");
        ++i_;
        try {
          const Word w = a == Alphabet::H2 ? z_encode(Composition{k}, ZTarget::H2)
                                           : z_encode(Composition{k}, ZTarget::PY);
          letters += w.letters();
        } catch (const Error& e) {
          throw ParseError(e.what(), pos);
        }
      } else if (c == 'p' || c == 'y' || c == 'd') {
        if (a == Alphabet::H2) throw ParseError("letter '" + std::string(1, c) + "' is not in alphabet H2", pos);
        letter(c == 'p' ? kP : (c == 'y' ? kY : kD), pos);
        ++i_;
      } else if (is_alpha(c) || is_digit(c)) {
        if (i_ == start) fail("unknown letter '" + std::string(1, c) + "'");
        // an operator such as 'sh' or 'o' may follow without a space
        if (peek_is_operator()) break;
        fail("unknown letter '" + std::string(1, c) + "'");
      } else {
        break;
      }
    }
    if (i_ == start) fail("expected a word");
    return Poly(Word(a, letters));
  }

  std::string_view s_;
  ParseContext ctx_;
  std::size_t i_ = 0;
};

}  // namespace

Poly parse_expr(std::string_view text, const ParseContext& ctx) { return Parser(text, ctx).parse(); }

Composition parse_composition(std::string_view text) {
  return Parser(text, ParseContext{}).composition_only();
}

Alphabet parse_alphabet(std::string_view name) {
  if (name == "h" || name == "H2" || name == "h2") return Alphabet::H2;
  if (name == "H" || name == "PY" || name == "py") return Alphabet::PY;
  if (name == "pdy" || name == "PDY") return Alphabet::PDY;
  throw DomainError("unknown alphabet '" + std::string(name) + "' (use h, H or pdy)");
}

std::string format_poly(const Poly& p, WordFormat format) {
  if (format == WordFormat::Letters || p.alphabet() == Alphabet::PDY) {
    if (format == WordFormat::Z) throw EncodingError("PDY words have no z-block form");
    return p.to_string();
  }
  const std::vector<Word> words = p.words();
  const bool decodable =
      std::all_of(words.begin(), words.end(), [](const Word& w) { return is_z_decodable(w); });
  if (!decodable) {
    if (format == WordFormat::Z) throw NotInSubalgebra("format_poly: word not z-decodable");
    return p.to_string();
  }
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Word& w : words) {
    const Rational c = p.coeff(w);
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += to_display_string(mag);
      continue;
    }
    if (mag != 1) out += to_display_string(mag) + " ";
    for (const int k : z_decode(w).parts) out += "z{" + std::to_string(k) + "}";
  }
  return out;
}

}  // namespace mzv
