#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzvlab/words.hpp"

namespace mzv {

struct PairLess {
  bool operator()(const std::pair<std::string, std::string>& a,
                  const std::pair<std::string, std::string>& b) const {
    CanonicalLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

/// Finite linear combination of word pairs over one alphabet.
class Tensor2 {
 public:
  using Key = std::pair<std::string, std::string>;
  using Terms = std::map<Key, Rational, PairLess>;

  explicit Tensor2(Alphabet a) : alphabet_(a) {}

  Alphabet alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::string& left, const std::string& right, const Rational& c);
  void add_term(const Word& left, const Word& right, const Rational& c);
  /// Adds c * (a (x) b) for polynomials a, b.
  void add_product(const Poly& a, const Poly& b, const Rational& c = 1);

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  Tensor2& operator*=(const Rational& c);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  bool operator==(const Tensor2&) const = default;

  Tensor2 relabel(Alphabet target) const;

  std::string to_string() const;  // "py ⊗ 1 + 1 ⊗ py"

 private:
  Alphabet alphabet_;
  Terms terms_;
};

class Tensor3 {
 public:
  using Key = std::array<std::string, 3>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      CanonicalLess less;
      for (std::size_t i = 0; i < 3; ++i) {
        if (less(a[i], b[i])) return true;
        if (less(b[i], a[i])) return false;
      }
      return false;
    }
  };
  using Terms = std::map<Key, Rational, KeyLess>;

  explicit Tensor3(Alphabet a) : alphabet_(a) {}
  const Terms& terms() const { return terms_; }
  void add_term(const Key& k, const Rational& c);
  bool operator==(const Tensor3&) const = default;
  std::string to_string() const;

 private:
  Alphabet alphabet_;
  Terms terms_;
};

using Coproduct = std::function<Tensor2(const Poly&)>;
using Counit = std::function<Rational(const Poly&)>;

/// Deconcatenation at z-block boundaries. Throws NotInSubalgebra for words
/// that are not z-decodable.
Tensor2 deconcat(const Poly& p);
/// Coefficient of the empty word.
Rational counit(const Poly& p);

/// (f (x) g) applied factorwise.
Tensor2 map_tensor(const Tensor2& t, const LinearMap& f, const LinearMap& g, Alphabet target);
/// a (x) b -> b (x) a.
Tensor2 flip(const Tensor2& t);
/// m(a, b) summed over the tensor.
Poly contract(const Tensor2& t, const BilinearMap& m);
/// (a (x) b)(c (x) d) = m(a, c) (x) m(b, d).
Tensor2 tensor_multiply(const Tensor2& x, const Tensor2& y, const BilinearMap& m);
/// (Delta (x) id) and (id (x) Delta).
Tensor3 coproduct_left(const Tensor2& t, const Coproduct& delta);
Tensor3 coproduct_right(const Tensor2& t, const Coproduct& delta);

/// Antipode of (H1, *_lambda, deconcat): S(w) = -sum_{w = w1 w2, w2 != 1} S(w1) * w2.
Poly antipode(const Poly& p, const Rational& lambda);
/// Same recursion for the classical stuffle on h1.
Poly antipode_classical(const Poly& p);

struct HopfStructure {
  std::string name;
  Alphabet alphabet;
  BilinearMap product;
  Coproduct coproduct;
  Counit counit;
  LinearMap antipode;
  Poly unit;
};

/// (H1, *_lambda, deconcat) over PY.
HopfStructure quasi_shuffle_hopf(const Rational& lambda);
/// (h1, *, deconcat) over H2.
HopfStructure classical_quasi_shuffle_hopf();

/// m_T = T^{-1} m (T x T), Delta_T = (T^{-1} x T^{-1}) Delta T, S_T = T^{-1} S T, eps_T = eps T.
HopfStructure transfer_hopf(const HopfStructure& base, const LinearMap& iso, const LinearMap& iso_inv,
                            const std::string& name);

struct AxiomFailure {
  std::string axiom;
  std::string input;
  std::string detail;
};

/// Unit, counit, coassociativity and both antipode identities on each sample,
/// and Delta(uv) = Delta(u) Delta(v) on each sample pair.
std::vector<AxiomFailure> check_hopf_axioms(const HopfStructure& h, const std::vector<Poly>& samples,
                                            const std::vector<std::pair<Poly, Poly>>& pairs = {});

/// s o (tau_tilde x tau_tilde) o Delta o tau_tilde on H0.
Tensor2 coproduct_square_op(const Poly& p);

/// Unital infinitesimal coproduct on PDY, computed by splitting off the first letter.
Tensor2 infinitesimal_coproduct(const Poly& p);
/// Same, on a raw (unnormalized) letter sequence, splitting the sequence at `split`
/// and recursing on both halves. Factors are normalized after each step.
Tensor2 infinitesimal_coproduct_split(const std::string& raw_letters, std::size_t split);
/// Splitting at the first letter throughout, on an unnormalized sequence.
Tensor2 infinitesimal_coproduct_raw(const std::string& raw_letters);

enum class CoidealSide { Left, Right };

struct CoidealWitness {
  std::string sample;
  std::string left;
  std::string right;
};

struct CoidealResult {
  bool ok = true;
  std::optional<CoidealWitness> witness;
};

/// Left: Delta(J) in C x J, so the right factor of every term must satisfy the
/// predicate. Right: Delta(J) in J x C, the left factor is checked.
CoidealResult coideal_check(const std::function<bool(const Word&)>& predicate, const Coproduct& delta,
                            CoidealSide side, const std::vector<Word>& samples);

void clear_hopf_caches();

}  // namespace mzv
