#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mzvlab/errors.hpp"
#include "mzvlab/rational.hpp"

namespace mzv {

// Three word algebras:
//   H2  = Q<x0, x1>          (classical MZVs)
//   PY  = Q<p, y>            (q-models)
//   PDY = Q<p, d, y> / (pd = dp = 1)
enum class Alphabet : std::uint8_t { H2, PY, PDY };

std::string_view alphabet_name(Alphabet a);

// Letters are stored as small integer codes. PY and PDY share codes, and
// Phi: PY -> H2 is the identity on codes.
using Letter = char;
inline constexpr Letter kX0 = 0;
inline constexpr Letter kX1 = 1;
inline constexpr Letter kP = 0;
inline constexpr Letter kY = 1;
inline constexpr Letter kD = 2;

std::string_view letter_name(Alphabet a, Letter l);
bool is_letter_of(Alphabet a, Letter l);

/// Canonical order: shorter first, then lexicographic on letter codes.
struct CanonicalLess {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Rewrites pd and dp to the empty word. Identity on H2/PY.
std::string normalize_letters(Alphabet a, std::string_view raw);

/// A normalized word. Construction validates letters and applies pd = dp = 1.
class Word {
 public:
  explicit Word(Alphabet a) : alphabet_(a) {}
  Word(Alphabet a, std::string_view raw_letters);
  Word(Alphabet a, std::initializer_list<Letter> letters);

  static Word unit(Alphabet a) { return Word(a); }

  Alphabet alphabet() const { return alphabet_; }
  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word operator*(const Word& other) const;  // concatenation

  /// "x0x1", "ppy", "1" for the empty word.
  std::string to_string() const;

  bool operator==(const Word& other) const = default;
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  struct Trusted {};
  Word(Alphabet a, std::string letters, Trusted) : alphabet_(a), letters_(std::move(letters)) {}
  friend class Poly;

  Alphabet alphabet_;
  std::string letters_;
};

/// Finite map word -> nonzero rational over a single alphabet.
class Poly {
 public:
  using Terms = std::map<std::string, Rational, CanonicalLess>;

  explicit Poly(Alphabet a) : alphabet_(a) {}
  Poly(const Word& w, const Rational& c = 1);  // NOLINT(google-explicit-constructor)
  Poly(Alphabet a, Terms terms);

  static Poly zero(Alphabet a) { return Poly(a); }
  static Poly unit(Alphabet a) { return Poly(Word(a)); }

  Alphabet alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Word& w) const;

  /// letters must already be normalized for this alphabet.
  void add_term(const std::string& letters, const Rational& c);
  void add_term(const Word& w, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  bool operator==(const Poly& other) const = default;

  std::vector<Word> words() const;

  /// Linear extension of a word-level action.
  Poly map_words(const std::function<Poly(const Word&)>& f, Alphabet target) const;

  /// Re-tags the alphabet without touching letters (used for Phi).
  Poly relabel(Alphabet target) const;

  std::string to_string() const;

 private:
  Alphabet alphabet_;
  Terms terms_;
};

/// Concatenation product of Q<X>, normalized.
Poly concat(const Poly& a, const Poly& b);
Poly concat(const Word& a, const Poly& b);
Poly concat(const Poly& a, const Word& b);

using LinearMap = std::function<Poly(const Poly&)>;
using BilinearMap = std::function<Poly(const Poly&, const Poly&)>;

void require_alphabet(const Poly& p, Alphabet a, std::string_view context);
void require_alphabet(const Word& w, Alphabet a, std::string_view context);

// --- Compositions and z-blocks -------------------------------------------

struct Composition {
  std::vector<int> parts;

  Composition() = default;
  Composition(std::initializer_list<int> p) : parts(p) {}
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {}

  std::size_t size() const { return parts.size(); }
  bool empty() const { return parts.empty(); }
  int weight() const;
  std::string to_string() const;  // "(2,1)", "()"

  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;
};

/// H2: z_k = x0^{k-1} x1 (k >= 1).  PY: z_k = p^k y (k >= 0).
enum class ZTarget { H2, PY };

Word z_encode(const Composition& c, ZTarget target);
Composition z_decode(const Word& w);
bool is_z_decodable(const Word& w);

struct Grading {
  int weight = 0;
  int depth = 0;
  int length = 0;

  bool operator==(const Grading&) const = default;
  Grading operator+(const Grading& o) const {
    return {weight + o.weight, depth + o.depth, length + o.length};
  }
};

/// PY/PDY: weight = #p - #d, depth = #y.  H2: weight = length, depth = #x1.
Grading grading(const Word& w);

enum class Subspace { h0, h1, hm1, H0, H1, Hm1 };

std::string_view subspace_name(Subspace s);
bool membership(const Word& w, Subspace s);
bool membership(const Poly& p, Subspace s);

// --- Letter-level morphisms ---------------------------------------------

Word phi(const Word& w);      // PY -> H2, p -> x0, y -> x1
Word phi_inv(const Word& w);  // H2 -> PY
Poly phi(const Poly& p);
Poly phi_inv(const Poly& p);

/// J: H2 -> PY, x0 -> p, x1 -> py.
Word embed_J(const Word& w);
Poly embed_J(const Poly& p);

/// p^k y blocks (k >= 1) of an H0 word to x0^{k-1} x1 blocks.
Word block_map(const Word& w);
Poly block_map(const Poly& p);

Poly weight_projection(const Poly& p, int weight);

}  // namespace mzv
