#include "mzvlab/words.hpp"

#include <algorithm>
#include <sstream>

namespace mzv {

std::string_view alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::H2: return "H2";
    case Alphabet::PY: return "PY";
    case Alphabet::PDY: return "PDY";
  }
  return "?";
}

std::string_view letter_name(Alphabet a, Letter l) {
  if (a == Alphabet::H2) return l == kX0 ? "x0" : "x1";
  switch (l) {
    case kP: return "p";
    case kY: return "y";
    default: return "d";
  }
}

bool is_letter_of(Alphabet a, Letter l) {
  switch (a) {
    case Alphabet::H2:
    case Alphabet::PY: return l == 0 || l == 1;
    case Alphabet::PDY: return l == 0 || l == 1 || l == 2;
  }
  return false;
}

std::string normalize_letters(Alphabet a, std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (const Letter l : raw) {
    if (!is_letter_of(a, l)) {
      throw InvalidLetter("letter code " + std::to_string(static_cast<int>(l)) +
                          " is not in alphabet " + std::string(alphabet_name(a)));
    }
    if (a == Alphabet::PDY && !out.empty() &&
        ((out.back() == kP && l == kD) || (out.back() == kD && l == kP))) {
      out.pop_back();
      continue;
    }
    out.push_back(l);
  }
  return out;
}

Word::Word(Alphabet a, std::string_view raw_letters)
    : alphabet_(a), letters_(normalize_letters(a, raw_letters)) {}

Word::Word(Alphabet a, std::initializer_list<Letter> letters)
    : Word(a, std::string_view(std::string(letters.begin(), letters.end()))) {}

Word Word::operator*(const Word& other) const {
  require_alphabet(other, alphabet_, "concatenation");
  if (alphabet_ != Alphabet::PDY) return Word(alphabet_, letters_ + other.letters_, Trusted{});
  return Word(alphabet_, letters_ + other.letters_);
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const Letter l : letters_) out += letter_name(alphabet_, l);
  return out;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (alphabet_ != other.alphabet_) return alphabet_ <=> other.alphabet_;
  if (letters_.size() != other.letters_.size()) return letters_.size() <=> other.letters_.size();
  const int c = letters_.compare(other.letters_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// --- Poly -----------------------------------------------------------------

Poly::Poly(const Word& w, const Rational& c) : alphabet_(w.alphabet()) {
  if (c != 0) terms_.emplace(w.letters(), c);
}

Poly::Poly(Alphabet a, Terms terms) : alphabet_(a), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Rational Poly::coeff(const Word& w) const {
  if (w.alphabet() != alphabet_) return 0;
  const auto it = terms_.find(w.letters());
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const std::string& letters, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(letters, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::add_term(const Word& w, const Rational& c) {
  require_alphabet(w, alphabet_, "add_term");
  add_term(w.letters(), c);
}

Poly& Poly::operator+=(const Poly& other) {
  require_alphabet(other, alphabet_, "addition");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_alphabet(other, alphabet_, "subtraction");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out(*this);
  out *= -1;
  return out;
}

std::vector<Word> Poly::words() const {
  std::vector<Word> out;
  out.reserve(terms_.size());
  for (const auto& kv : terms_) out.push_back(Word(alphabet_, kv.first, Word::Trusted{}));
  return out;
}

Poly Poly::map_words(const std::function<Poly(const Word&)>& f, Alphabet target) const {
  Poly out(target);
  for (const auto& [w, c] : terms_) {
    Poly image = f(Word(alphabet_, w, Word::Trusted{}));
    require_alphabet(image, target, "map_words");
    for (const auto& [iw, ic] : image.terms_) out.add_term(iw, ic * c);
  }
  return out;
}

Poly Poly::relabel(Alphabet target) const {
  Poly out(target);
  out.terms_ = terms_;
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [letters, c] : terms_) {
    const Word w(alphabet_, letters, Word::Trusted{});
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      os << to_display_string(mag);
    } else {
      if (mag != 1) os << to_display_string(mag) << " ";
      os << w.to_string();
    }
  }
  return os.str();
}

Poly concat(const Poly& a, const Poly& b) {
  require_alphabet(b, a.alphabet(), "concatenation");
  Poly out(a.alphabet());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (a.alphabet() == Alphabet::PDY) {
        out.add_term(normalize_letters(Alphabet::PDY, wa + wb), ca * cb);
      } else {
        out.add_term(wa + wb, ca * cb);
      }
    }
  }
  return out;
}

Poly concat(const Word& a, const Poly& b) { return concat(Poly(a), b); }
Poly concat(const Poly& a, const Word& b) { return concat(a, Poly(b)); }

void require_alphabet(const Poly& p, Alphabet a, std::string_view context) {
  if (p.alphabet() != a) {
    throw AlphabetMismatch(std::string(context) + ": expected alphabet " +
                           std::string(alphabet_name(a)) + ", got " +
                           std::string(alphabet_name(p.alphabet())));
  }
}

void require_alphabet(const Word& w, Alphabet a, std::string_view context) {
  if (w.alphabet() != a) {
    throw AlphabetMismatch(std::string(context) + ": expected alphabet " +
                           std::string(alphabet_name(a)) + ", got " +
                           std::string(alphabet_name(w.alphabet())));
  }
}

// --- Compositions ---------------------------------------------------------

int Composition::weight() const {
  int s = 0;
  for (const int k : parts) s += k;
  return s;
}

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

Word z_encode(const Composition& c, ZTarget target) {
  std::string letters;
  for (const int k : c.parts) {
    if (target == ZTarget::H2) {
      if (k < 1) throw EncodingError("z_" + std::to_string(k) + " has no H2 block (need k >= 1)");
      letters.append(static_cast<std::size_t>(k - 1), kX0);
      letters.push_back(kX1);
    } else {
      if (k < 0) throw EncodingError("z_" + std::to_string(k) + " has no PY block (need k >= 0)");
      letters.append(static_cast<std::size_t>(k), kP);
      letters.push_back(kY);
    }
  }
  return Word(target == ZTarget::H2 ? Alphabet::H2 : Alphabet::PY, letters);
}

Composition z_decode(const Word& w) {
  if (w.alphabet() == Alphabet::PDY) {
    throw AlphabetMismatch("z_decode: PDY words have no z-block codec");
  }
  Composition out;
  int run = 0;
  for (const Letter l : w.letters()) {
    if (l == 0) {
      ++run;
    } else {
      out.parts.push_back(w.alphabet() == Alphabet::H2 ? run + 1 : run);
      run = 0;
    }
  }
  if (run != 0) {
    throw NotInSubalgebra("z_decode: " + w.to_string() + " does not end in " +
                          (w.alphabet() == Alphabet::H2 ? "x1" : "y"));
  }
  return out;
}

bool is_z_decodable(const Word& w) {
  if (w.alphabet() == Alphabet::PDY) return false;
  return w.empty() || w.letters().back() == 1;
}

Grading grading(const Word& w) {
  Grading g;
  g.length = static_cast<int>(w.size());
  for (const Letter l : w.letters()) {
    if (w.alphabet() == Alphabet::H2) {
      ++g.weight;
      if (l == kX1) ++g.depth;
    } else {
      if (l == kP) ++g.weight;
      if (l == kD) --g.weight;
      if (l == kY) ++g.depth;
    }
  }
  return g;
}

std::string_view subspace_name(Subspace s) {
  switch (s) {
    case Subspace::h0: return "h0";
    case Subspace::h1: return "h1";
    case Subspace::hm1: return "hm1";
    case Subspace::H0: return "H0";
    case Subspace::H1: return "H1";
    case Subspace::Hm1: return "Hm1";
  }
  return "?";
}

bool membership(const Word& w, Subspace s) {
  const bool classical = s == Subspace::h0 || s == Subspace::h1 || s == Subspace::hm1;
  require_alphabet(w, classical ? Alphabet::H2 : Alphabet::PY,
                   std::string("membership in ") + std::string(subspace_name(s)));
  if (w.empty()) return true;
  // code 0 is x0/p, code 1 is x1/y in both alphabets
  const bool ends_ok = w.letters().back() == 1;
  const bool starts_ok = w.letters().front() == 0;
  switch (s) {
    case Subspace::h1:
    case Subspace::H1: return ends_ok;
    case Subspace::hm1:
    case Subspace::Hm1: return starts_ok;
    case Subspace::h0:
    case Subspace::H0: return starts_ok && ends_ok;
  }
  return false;
}

bool membership(const Poly& p, Subspace s) {
  return std::ranges::all_of(p.words(), [s](const Word& w) { return membership(w, s); });
}

Word phi(const Word& w) {
  require_alphabet(w, Alphabet::PY, "phi");
  return Word(Alphabet::H2, w.letters());
}

Word phi_inv(const Word& w) {
  require_alphabet(w, Alphabet::H2, "phi_inv");
  return Word(Alphabet::PY, w.letters());
}

Poly phi(const Poly& p) {
  require_alphabet(p, Alphabet::PY, "phi");
  return p.relabel(Alphabet::H2);
}

Poly phi_inv(const Poly& p) {
  require_alphabet(p, Alphabet::H2, "phi_inv");
  return p.relabel(Alphabet::PY);
}

Word embed_J(const Word& w) {
  require_alphabet(w, Alphabet::H2, "embed_J");
  std::string out;
  for (const Letter l : w.letters()) {
    out.push_back(kP);
    if (l == kX1) out.push_back(kY);
  }
  return Word(Alphabet::PY, out);
}

Poly embed_J(const Poly& p) {
  return p.map_words([](const Word& w) { return Poly(embed_J(w)); }, Alphabet::PY);
}

Word block_map(const Word& w) {
  require_alphabet(w, Alphabet::PY, "block_map");
  if (!membership(w, Subspace::H0)) {
    throw NotInSubalgebra("block_map: " + w.to_string() + " is not in H0");
  }
  const Composition c = z_decode(w);
  for (const int k : c.parts) {
    if (k == 0) throw EncodingError("block_map: z_0 block in " + w.to_string() + " has no H2 image");
  }
  return z_encode(c, ZTarget::H2);
}

Poly block_map(const Poly& p) {
  return p.map_words([](const Word& w) { return Poly(block_map(w)); }, Alphabet::H2);
}

Poly weight_projection(const Poly& p, int weight) {
  Poly out(p.alphabet());
  for (const Word& w : p.words()) {
    if (grading(w).weight == weight) out.add_term(w, p.coeff(w));
  }
  return out;
}

}  // namespace mzv
