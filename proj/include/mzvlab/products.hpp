#pragma once

#include <map>
#include <string>
#include <vector>

#include "mzvlab/words.hpp"

namespace mzv {

// Shuffle-type products. All are bilinear; word-level recursions are
// memoized in thread-local tables keyed by the ordered argument pair.

/// au sh bv = a(u sh bv) + b(au sh v) on H2.
Poly shuffle(const Poly& u, const Poly& v);

/// Stuffle on h1 (z_k = x0^{k-1} x1).
Poly quasi_shuffle(const Poly& u, const Poly& v);

/// z_n u *_l z_m v = z_n(u *_l z_m v) + z_m(z_n u *_l v) + l z_{n+m}(u *_l v) on H1 (PY, z_0 allowed).
Poly quasi_shuffle_lambda(const Poly& u, const Poly& v, const Rational& lambda);

/// lambda-shuffle on Q<p,y>: y is pulled out from either side, p follows (SH3).
Poly shuffle_lambda_py(const Poly& u, const Poly& v, const Rational& lambda);

/// lambda-shuffle on Q<p,d,y>/(pd = dp = 1). Restricts to shuffle_lambda_py on p,y words.
Poly shuffle_lambda_pdy(const Poly& u, const Poly& v, const Rational& lambda);

/// The same recursion run directly on unnormalized letter sequences.
Poly shuffle_lambda_pdy_raw(const std::string& u_raw, const std::string& v_raw, const Rational& lambda);

/// Star shuffle on H2:
///   au sh* bv = a(u sh* bv) + b(au sh* v) - delta(u) tau(a) bv - delta(v) tau(b) au.
Poly shuffle_star(const Poly& u, const Poly& v);

/// ua sh* vb = ua sh vb - (u sh v tau(b)) a - (u tau(a) sh v) b, nonempty words only.
Poly shuffle_star_alt(const Poly& u, const Poly& v);

/// T(z_m w) = z_m w - z_{m-1} w for leading part m >= 1 (PY).
Poly t_op(const Poly& p);

/// OOZ quasi-shuffle on H0:
///   z_m u * z_n v = z_m(u *_1 T(z_n v)) + z_n(T(z_m u) *_1 v) + (z_{m+n} - z_{m+n-1})(u *_1 v).
Poly ooz_quasi_shuffle(const Poly& u, const Poly& v);

/// Contraction: (u z_a) o (z_b v) = u z_{a+b} v and w o 1 = 0 (PY z-words).
Poly ihara_circ(const Poly& u, const Poly& v);

/// m_T = T^{-1} o m o (T x T). Throws InconsistentIso if T^{-1}(T(x)) != x on an input.
Poly transferred_product(const BilinearMap& base, const LinearMap& iso, const LinearMap& iso_inv,
                         const Poly& u, const Poly& v);

/// tau_tilde o (*_OOZ) o (tau_tilde x tau_tilde) on H0.
Poly ooz_square(const Poly& u, const Poly& v);

/// The same product through the four-term expansion in terms of the
/// tau_tilde-transferred *_1 product:
///   up^ay^b [] vp^cy^d = up^ay^b []_1 vp^cy^d - (up^{a-1} []_1 vp^cy^{d-1}) py^b
///                       - (up^ay^{b-1} []_1 vp^{c-1}) py^d - (up^{a-1} []_1 vp^{c-1}) py^{b+d-1}.
Poly ooz_square_four_term(const Poly& u, const Poly& v);

// --- Words over Y = {z_k : k in Z} ---------------------------------------

using ZWord = std::vector<int>;

struct ZWordLess {
  bool operator()(const ZWord& a, const ZWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class ZPoly {
 public:
  using Terms = std::map<ZWord, Rational, ZWordLess>;

  ZPoly() = default;
  ZPoly(const ZWord& w, const Rational& c = 1);  // NOLINT(google-explicit-constructor)

  static ZPoly unit() { return ZPoly(ZWord{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const ZWord& w, const Rational& c);

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const Rational& c);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  bool operator==(const ZPoly&) const = default;

  std::string to_string() const;  // "2 z{1}z{1} - z{1}z{0}"

 private:
  Terms terms_;
};

/// PY H1 polynomial to z-words. Throws NotInSubalgebra for words ending in p.
ZPoly to_zpoly(const Poly& p);
/// Back to PY; every index must be >= 0.
Poly from_zpoly(const ZPoly& z);

/// Right-recursive closed form of *_OOZ on Q<Y>:
///   u z_m * v z_n = (u * v z_n) z_m + (u z_m * v) z_n + (u * v) z_{n+m}
///                 - delta(v) u z_m z_{n-1} - delta(u) v z_n z_{m-1}
///                 - delta(v) u z_{n+m-1} - delta(u) v z_{n+m-1} + delta(u) delta(v) z_{n+m-1}.
ZPoly ooz_explicit(const ZPoly& u, const ZPoly& v);

/// z-word stuffle with stuffing weight lambda, on arbitrary integer indices.
ZPoly zword_quasi_shuffle(const ZPoly& u, const ZPoly& v, const Rational& lambda);

enum class ProductTag {
  Shuffle,
  QuasiShuffle,
  QuasiShuffleLambda,
  ShuffleLambdaPY,
  ShuffleLambdaPDY,
  ShuffleStar,
  OOZQuasiShuffle,
  OOZSquare,
  IharaCirc,
};

struct ProductKind {
  ProductTag tag;
  Rational lambda = 1;
};

std::string product_name(const ProductKind& k);
Poly multiply(const ProductKind& kind, const Poly& u, const Poly& v);
BilinearMap as_bilinear(const ProductKind& kind);

/// Drops the thread-local memo tables.
void clear_product_caches();

}  // namespace mzv
