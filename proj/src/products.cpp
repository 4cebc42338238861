#include "mzvlab/products.hpp"

#include <unordered_map>

#include "mzvlab/maps.hpp"

namespace mzv {

namespace {

using Terms = Poly::Terms;
using ZTerms = ZPoly::Terms;

void accumulate(Terms& out, const std::string& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = out.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

void accumulate(ZTerms& out, const ZWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = out.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

// out += scale * (letter . t), with pd = dp = 1 cancellation on PDY.
void add_prepended(Terms& out, Letter letter, const Terms& t, const Rational& scale, bool pdy) {
  for (const auto& [w, c] : t) {
    if (pdy && !w.empty() &&
        ((letter == kD && w.front() == kP) || (letter == kP && w.front() == kD))) {
      accumulate(out, w.substr(1), scale * c);
    } else {
      accumulate(out, std::string(1, letter) + w, scale * c);
    }
  }
}

void add_scaled(Terms& out, const Terms& t, const Rational& scale) {
  for (const auto& [w, c] : t) accumulate(out, w, scale * c);
}

void add_appended(Terms& out, const Terms& t, const std::string& suffix, const Rational& scale) {
  for (const auto& [w, c] : t) accumulate(out, w + suffix, scale * c);
}

std::string pair_key(const std::string& u, const std::string& v) {
  std::string key;
  key.reserve(u.size() + v.size() + 1);
  key += u;
  key += '\x7f';
  key += v;
  return key;
}

std::string lambda_key(const Rational& lambda, const std::string& u, const std::string& v) {
  return lambda.get_str() + "|" + pair_key(u, v);
}

Terms single(const std::string& w) { return Terms{{w, Rational(1)}}; }

template <typename Table>
Table& cache() {
  thread_local Table table;
  return table;
}

struct ShuffleTable : std::unordered_map<std::string, Terms> {};
struct ShuffleLambdaTable : std::unordered_map<std::string, Terms> {};
struct ShuffleStarTable : std::unordered_map<std::string, Terms> {};
struct StuffleTable : std::unordered_map<std::string, ZTerms> {};
struct OozExplicitTable : std::unordered_map<std::string, ZTerms> {};

// --- shuffle on raw letter strings ---------------------------------------

const Terms& shuffle_words(const std::string& u, const std::string& v) {
  auto& table = cache<ShuffleTable>();
  const std::string key = pair_key(u, v);
  if (auto it = table.find(key); it != table.end()) return it->second;
  Terms out;
  if (u.empty()) {
    out = single(v);
  } else if (v.empty()) {
    out = single(u);
  } else {
    add_prepended(out, u[0], shuffle_words(u.substr(1), v), 1, false);
    add_prepended(out, v[0], shuffle_words(u, v.substr(1)), 1, false);
  }
  return table.emplace(key, std::move(out)).first->second;
}

// --- lambda-shuffle on p, y (and d) ----------------------------------------

const Terms& shuffle_lambda_words(const std::string& u, const std::string& v, const Rational& lambda,
                                  bool pdy) {
  auto& table = cache<ShuffleLambdaTable>();
  const std::string key = std::string(pdy ? "D" : "P") + lambda_key(lambda, u, v);
  if (auto it = table.find(key); it != table.end()) return it->second;

  Terms out;
  auto rec = [&](const std::string& a, const std::string& b) -> const Terms& {
    return shuffle_lambda_words(a, b, lambda, pdy);
  };
  if (u.empty()) {
    out = single(normalize_letters(pdy ? Alphabet::PDY : Alphabet::PY, v));
  } else if (v.empty()) {
    out = single(normalize_letters(pdy ? Alphabet::PDY : Alphabet::PY, u));
  } else if (u[0] == kY) {
    add_prepended(out, kY, rec(u.substr(1), v), 1, pdy);
  } else if (v[0] == kY) {
    add_prepended(out, kY, rec(u, v.substr(1)), 1, pdy);
  } else {
    const Letter a = u[0];
    const Letter b = v[0];
    const std::string u1 = u.substr(1);
    const std::string v1 = v.substr(1);
    if (a == kP && b == kP) {
      // p(pu sh v + u sh pv + lambda u sh v)
      Terms inner;
      add_scaled(inner, rec(u, v1), 1);
      add_scaled(inner, rec(u1, v), 1);
      add_scaled(inner, rec(u1, v1), lambda);
      add_prepended(out, kP, inner, 1, pdy);
    } else if (a == kD && b == kD) {
      // (1/lambda)[d(u sh v) - u sh dv - du sh v]
      const Rational inv = 1 / lambda;
      add_prepended(out, kD, rec(u1, v1), inv, pdy);
      add_scaled(out, rec(u1, v), -inv);
      add_scaled(out, rec(u, v1), -inv);
    } else if (a == kD && b == kP) {
      // du sh pv = d(u sh pv) - u sh v - lambda du sh v
      add_prepended(out, kD, rec(u1, v), 1, pdy);
      add_scaled(out, rec(u1, v1), -1);
      add_scaled(out, rec(u, v1), -lambda);
    } else {
      // pv sh du := du sh pv, read with the roles of the arguments swapped
      add_prepended(out, kD, rec(v1, u), 1, pdy);
      add_scaled(out, rec(v1, u1), -1);
      add_scaled(out, rec(v, u1), -lambda);
    }
  }
  return table.emplace(key, std::move(out)).first->second;
}

// --- star shuffle ----------------------------------------------------------

Letter flip(Letter l) { return l == kX0 ? kX1 : kX0; }

const Terms& shuffle_star_words(const std::string& u, const std::string& v) {
  auto& table = cache<ShuffleStarTable>();
  const std::string key = pair_key(u, v);
  if (auto it = table.find(key); it != table.end()) return it->second;
  Terms out;
  if (u.empty()) {
    out = single(v);
  } else if (v.empty()) {
    out = single(u);
  } else {
    const Letter a = u[0];
    const Letter b = v[0];
    const std::string u1 = u.substr(1);
    const std::string v1 = v.substr(1);
    add_prepended(out, a, shuffle_star_words(u1, v), 1, false);
    add_prepended(out, b, shuffle_star_words(u, v1), 1, false);
    if (u1.empty()) accumulate(out, std::string(1, flip(a)) + v, -1);
    if (v1.empty()) accumulate(out, std::string(1, flip(b)) + u, -1);
  }
  return table.emplace(key, std::move(out)).first->second;
}

// --- z-word stuffle --------------------------------------------------------

std::string zkey(const Rational& lambda, const ZWord& u, const ZWord& v) {
  std::string key = lambda.get_str() + "|";
  for (const int k : u) key += std::to_string(k) + ",";
  key += "|";
  for (const int k : v) key += std::to_string(k) + ",";
  return key;
}

void add_zprepended(ZTerms& out, int letter, const ZTerms& t, const Rational& scale) {
  for (const auto& [w, c] : t) {
    ZWord nw;
    nw.reserve(w.size() + 1);
    nw.push_back(letter);
    nw.insert(nw.end(), w.begin(), w.end());
    accumulate(out, nw, scale * c);
  }
}

void add_zappended(ZTerms& out, const ZTerms& t, std::initializer_list<int> suffix,
                   const Rational& scale) {
  for (const auto& [w, c] : t) {
    ZWord nw = w;
    nw.insert(nw.end(), suffix.begin(), suffix.end());
    accumulate(out, nw, scale * c);
  }
}

const ZTerms& stuffle_words(const ZWord& u, const ZWord& v, const Rational& lambda) {
  auto& table = cache<StuffleTable>();
  const std::string key = zkey(lambda, u, v);
  if (auto it = table.find(key); it != table.end()) return it->second;
  ZTerms out;
  if (u.empty()) {
    out.emplace(v, 1);
  } else if (v.empty()) {
    out.emplace(u, 1);
  } else {
    const ZWord u1(u.begin() + 1, u.end());
    const ZWord v1(v.begin() + 1, v.end());
    add_zprepended(out, u[0], stuffle_words(u1, v, lambda), 1);
    add_zprepended(out, v[0], stuffle_words(u, v1, lambda), 1);
    add_zprepended(out, u[0] + v[0], stuffle_words(u1, v1, lambda), lambda);
  }
  return table.emplace(key, std::move(out)).first->second;
}

const ZTerms& ooz_explicit_words(const ZWord& u, const ZWord& v) {
  auto& table = cache<OozExplicitTable>();
  const std::string key = zkey(0, u, v);
  if (auto it = table.find(key); it != table.end()) return it->second;
  ZTerms out;
  if (u.empty()) {
    out.emplace(v, 1);
  } else if (v.empty()) {
    out.emplace(u, 1);
  } else {
    const int m = u.back();
    const int n = v.back();
    const ZWord up(u.begin(), u.end() - 1);
    const ZWord vp(v.begin(), v.end() - 1);
    const bool du = up.empty();
    const bool dv = vp.empty();
    add_zappended(out, ooz_explicit_words(up, v), {m}, 1);
    add_zappended(out, ooz_explicit_words(u, vp), {n}, 1);
    add_zappended(out, ooz_explicit_words(up, vp), {n + m}, 1);
    if (dv) add_zappended(out, ZTerms{{up, 1}}, {m, n - 1}, -1);
    if (du) add_zappended(out, ZTerms{{vp, 1}}, {n, m - 1}, -1);
    if (dv) add_zappended(out, ZTerms{{up, 1}}, {n + m - 1}, -1);
    if (du) add_zappended(out, ZTerms{{vp, 1}}, {n + m - 1}, -1);
    if (du && dv) accumulate(out, ZWord{n + m - 1}, 1);
  }
  return table.emplace(key, std::move(out)).first->second;
}

// --- helpers for Poly-level wrappers --------------------------------------

template <typename WordProduct>
Poly bilinear(const Poly& u, const Poly& v, Alphabet a, WordProduct&& product) {
  Terms out;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      add_scaled(out, product(wu, wv), cu * cv);
    }
  }
  return Poly(a, std::move(out));
}

ZWord composition_of(const std::string& letters, Alphabet a) {
  return z_decode(Word(a, letters)).parts;
}

void require_h0_word(const std::string& letters, std::string_view context) {
  const Word w(Alphabet::PY, letters);
  if (!membership(w, Subspace::H0)) {
    throw NotInSubalgebra(std::string(context) + ": " + w.to_string() + " is not in H0");
  }
}

}  // namespace

// --- public API --------------------------------------------------------------

Poly shuffle(const Poly& u, const Poly& v) {
  require_alphabet(u, Alphabet::H2, "shuffle");
  require_alphabet(v, Alphabet::H2, "shuffle");
  return bilinear(u, v, Alphabet::H2, shuffle_words);
}

ZPoly zword_quasi_shuffle(const ZPoly& u, const ZPoly& v, const Rational& lambda) {
  ZPoly out;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      for (const auto& [w, c] : stuffle_words(wu, wv, lambda)) out.add_term(w, c * cu * cv);
    }
  }
  return out;
}

namespace {

Poly stuffle_poly(const Poly& u, const Poly& v, const Rational& lambda, Alphabet a, ZTarget target) {
  Poly out(a);
  for (const auto& [wu, cu] : u.terms()) {
    const ZWord cu_parts = composition_of(wu, a);
    for (const auto& [wv, cv] : v.terms()) {
      const ZWord cv_parts = composition_of(wv, a);
      for (const auto& [w, c] : stuffle_words(cu_parts, cv_parts, lambda)) {
        out.add_term(z_encode(Composition(w), target), c * cu * cv);
      }
    }
  }
  return out;
}

}  // namespace

Poly quasi_shuffle(const Poly& u, const Poly& v) {
  require_alphabet(u, Alphabet::H2, "quasi_shuffle");
  require_alphabet(v, Alphabet::H2, "quasi_shuffle");
  return stuffle_poly(u, v, 1, Alphabet::H2, ZTarget::H2);
}

Poly quasi_shuffle_lambda(const Poly& u, const Poly& v, const Rational& lambda) {
  require_alphabet(u, Alphabet::PY, "quasi_shuffle_lambda");
  require_alphabet(v, Alphabet::PY, "quasi_shuffle_lambda");
  return stuffle_poly(u, v, lambda, Alphabet::PY, ZTarget::PY);
}

Poly shuffle_lambda_py(const Poly& u, const Poly& v, const Rational& lambda) {
  require_alphabet(u, Alphabet::PY, "shuffle_lambda_py");
  require_alphabet(v, Alphabet::PY, "shuffle_lambda_py");
  return bilinear(u, v, Alphabet::PY, [&](const std::string& a, const std::string& b) -> const Terms& {
    return shuffle_lambda_words(a, b, lambda, false);
  });
}

Poly shuffle_lambda_pdy(const Poly& u, const Poly& v, const Rational& lambda) {
  require_alphabet(u, Alphabet::PDY, "shuffle_lambda_pdy");
  require_alphabet(v, Alphabet::PDY, "shuffle_lambda_pdy");
  if (lambda == 0) throw DomainError("shuffle_lambda_pdy: lambda must be nonzero");
  return bilinear(u, v, Alphabet::PDY, [&](const std::string& a, const std::string& b) -> const Terms& {
    return shuffle_lambda_words(a, b, lambda, true);
  });
}

Poly shuffle_lambda_pdy_raw(const std::string& u_raw, const std::string& v_raw, const Rational& lambda) {
  if (lambda == 0) throw DomainError("shuffle_lambda_pdy: lambda must be nonzero");
  for (const Letter l : u_raw + v_raw) {
    if (!is_letter_of(Alphabet::PDY, l)) normalize_letters(Alphabet::PDY, std::string(1, l));
  }
  return Poly(Alphabet::PDY, shuffle_lambda_words(u_raw, v_raw, lambda, true));
}

Poly shuffle_star(const Poly& u, const Poly& v) {
  require_alphabet(u, Alphabet::H2, "shuffle_star");
  require_alphabet(v, Alphabet::H2, "shuffle_star");
  return bilinear(u, v, Alphabet::H2, shuffle_star_words);
}

Poly shuffle_star_alt(const Poly& u, const Poly& v) {
  require_alphabet(u, Alphabet::H2, "shuffle_star_alt");
  require_alphabet(v, Alphabet::H2, "shuffle_star_alt");
  Terms out;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      if (wu.empty() || wv.empty()) {
        throw DomainError("shuffle_star_alt: both arguments must be nonempty words");
      }
      const Rational c = cu * cv;
      const Letter a = wu.back();
      const Letter b = wv.back();
      const std::string u1 = wu.substr(0, wu.size() - 1);
      const std::string v1 = wv.substr(0, wv.size() - 1);
      add_scaled(out, shuffle_words(wu, wv), c);
      add_appended(out, shuffle_words(u1, v1 + std::string(1, flip(b))), std::string(1, a), -c);
      add_appended(out, shuffle_words(u1 + std::string(1, flip(a)), v1), std::string(1, b), -c);
    }
  }
  return Poly(Alphabet::H2, std::move(out));
}

Poly t_op(const Poly& p) {
  require_alphabet(p, Alphabet::PY, "t_op");
  Poly out(Alphabet::PY);
  for (const Word& w : p.words()) {
    Composition c = z_decode(w);
    if (c.empty() || c.parts.front() < 1) {
      throw DomainError("t_op: leading z-part of " + w.to_string() + " must be >= 1");
    }
    const Rational coef = p.coeff(w);
    out.add_term(w, coef);
    --c.parts.front();
    out.add_term(z_encode(c, ZTarget::PY), -coef);
  }
  return out;
}

Poly ooz_quasi_shuffle(const Poly& u, const Poly& v) {
  require_alphabet(u, Alphabet::PY, "ooz_quasi_shuffle");
  require_alphabet(v, Alphabet::PY, "ooz_quasi_shuffle");
  ZPoly out;
  for (const auto& [wu, cu] : u.terms()) {
    require_h0_word(wu, "ooz_quasi_shuffle");
    for (const auto& [wv, cv] : v.terms()) {
      require_h0_word(wv, "ooz_quasi_shuffle");
      const ZWord a = composition_of(wu, Alphabet::PY);
      const ZWord b = composition_of(wv, Alphabet::PY);
      const Rational c = cu * cv;
      if (a.empty() || b.empty()) {
        out.add_term(a.empty() ? b : a, c);
        continue;
      }
      const int m = a.front();
      const int n = b.front();
      const ZWord u1(a.begin() + 1, a.end());
      const ZWord v1(b.begin() + 1, b.end());
      ZWord t_b = b;
      --t_b.front();
      ZWord t_a = a;
      --t_a.front();
      ZTerms acc;
      // z_m (u *_1 T(z_n v))
      add_zprepended(acc, m, stuffle_words(u1, b, 1), c);
      add_zprepended(acc, m, stuffle_words(u1, t_b, 1), -c);
      // z_n (T(z_m u) *_1 v)
      add_zprepended(acc, n, stuffle_words(a, v1, 1), c);
      add_zprepended(acc, n, stuffle_words(t_a, v1, 1), -c);
      // (z_{m+n} - z_{m+n-1}) (u *_1 v)
      const ZTerms& uv = stuffle_words(u1, v1, 1);
      add_zprepended(acc, m + n, uv, c);
      add_zprepended(acc, m + n - 1, uv, -c);
      for (const auto& [w, k] : acc) out.add_term(w, k);
    }
  }
  return from_zpoly(out);
}

Poly ihara_circ(const Poly& u, const Poly& v) {
  require_alphabet(u, Alphabet::PY, "ihara_circ");
  require_alphabet(v, Alphabet::PY, "ihara_circ");
  ZPoly out;
  for (const auto& [wu, cu] : u.terms()) {
    const ZWord a = composition_of(wu, Alphabet::PY);
    if (a.empty()) throw DomainError("ihara_circ: left factor must be a nonempty z-word");
    for (const auto& [wv, cv] : v.terms()) {
      const ZWord b = composition_of(wv, Alphabet::PY);
      if (b.empty()) continue;  // z_k o 1 = 0
      ZWord w(a.begin(), a.end() - 1);
      w.push_back(a.back() + b.front());
      w.insert(w.end(), b.begin() + 1, b.end());
      out.add_term(w, cu * cv);
    }
  }
  return from_zpoly(out);
}

Poly transferred_product(const BilinearMap& base, const LinearMap& iso, const LinearMap& iso_inv,
                         const Poly& u, const Poly& v) {
  const Poly tu = iso(u);
  const Poly tv = iso(v);
  if (iso_inv(tu) != u || iso_inv(tv) != v) {
    throw InconsistentIso("transferred_product: iso_inv o iso is not the identity on the inputs");
  }
  return iso_inv(base(tu, tv));
}

Poly ooz_square(const Poly& u, const Poly& v) {
  return transferred_product(ooz_quasi_shuffle, LinearMap(tau_tilde_poly), LinearMap(tau_tilde_poly),
                             u, v);
}

Poly ooz_square_four_term(const Poly& u, const Poly& v) {
  require_alphabet(u, Alphabet::PY, "ooz_square_four_term");
  require_alphabet(v, Alphabet::PY, "ooz_square_four_term");
  auto square1 = [](const std::string& a, const std::string& b) {
    const auto star1 = [](const Poly& x, const Poly& y) { return quasi_shuffle_lambda(x, y, 1); };
    return transferred_product(star1, LinearMap(tau_tilde_poly), LinearMap(tau_tilde_poly),
                               Poly(Word(Alphabet::PY, a)), Poly(Word(Alphabet::PY, b)));
  };
  // w = prefix p^a y^b with a, b >= 1
  struct Split {
    std::string prefix;
    int a;
    int b;
  };
  auto split = [](const std::string& w) {
    std::size_t i = w.size();
    int b = 0;
    while (i > 0 && w[i - 1] == kY) --i, ++b;
    int a = 0;
    while (i > 0 && w[i - 1] == kP) --i, ++a;
    return Split{w.substr(0, i), a, b};
  };
  auto run = [](const std::string& prefix, int a, int b) {
    return prefix + std::string(static_cast<std::size_t>(a), kP) + std::string(static_cast<std::size_t>(b), kY);
  };
  auto py_power = [](int k) { return std::string(1, kP) + std::string(static_cast<std::size_t>(k), kY); };

  Poly out(Alphabet::PY);
  for (const auto& [wu, cu] : u.terms()) {
    require_h0_word(wu, "ooz_square_four_term");
    for (const auto& [wv, cv] : v.terms()) {
      require_h0_word(wv, "ooz_square_four_term");
      const Rational c = cu * cv;
      if (wu.empty() || wv.empty()) {
        out.add_term(wu.empty() ? wv : wu, c);
        continue;
      }
      const Split su = split(wu);
      const Split sv = split(wv);
      Poly acc = square1(wu, wv);
      acc -= concat(square1(run(su.prefix, su.a - 1, 0), run(sv.prefix, sv.a, sv.b - 1)),
                    Word(Alphabet::PY, py_power(su.b)));
      acc -= concat(square1(run(su.prefix, su.a, su.b - 1), run(sv.prefix, sv.a - 1, 0)),
                    Word(Alphabet::PY, py_power(sv.b)));
      acc -= concat(square1(run(su.prefix, su.a - 1, 0), run(sv.prefix, sv.a - 1, 0)),
                    Word(Alphabet::PY, py_power(su.b + sv.b - 1)));
      out += acc * c;
    }
  }
  return out;
}

// --- ZPoly -------------------------------------------------------------------

ZPoly::ZPoly(const ZWord& w, const Rational& c) {
  if (c != 0) terms_.emplace(w, c);
}

void ZPoly::add_term(const ZWord& w, const Rational& c) { accumulate(terms_, w, c); }

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

ZPoly& ZPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& kv : terms_) kv.second *= c;
  }
  return *this;
}

std::string ZPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
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
    for (const int k : w) out += "z{" + std::to_string(k) + "}";
  }
  return out;
}

ZPoly to_zpoly(const Poly& p) {
  require_alphabet(p, Alphabet::PY, "to_zpoly");
  ZPoly out;
  for (const Word& w : p.words()) out.add_term(z_decode(w).parts, p.coeff(w));
  return out;
}

Poly from_zpoly(const ZPoly& z) {
  Poly out(Alphabet::PY);
  for (const auto& [w, c] : z.terms()) out.add_term(z_encode(Composition(w), ZTarget::PY), c);
  return out;
}

ZPoly ooz_explicit(const ZPoly& u, const ZPoly& v) {
  ZPoly out;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      for (const auto& [w, c] : ooz_explicit_words(wu, wv)) out.add_term(w, c * cu * cv);
    }
  }
  return out;
}

// --- dispatch ------------------------------------------------------------------

std::string product_name(const ProductKind& k) {
  const std::string lam = "(" + to_display_string(k.lambda) + ")";
  switch (k.tag) {
    case ProductTag::Shuffle: return "shuffle";
    case ProductTag::QuasiShuffle: return "quasi_shuffle";
    case ProductTag::QuasiShuffleLambda: return "quasi_shuffle_lambda" + lam;
    case ProductTag::ShuffleLambdaPY: return "shuffle_lambda_py" + lam;
    case ProductTag::ShuffleLambdaPDY: return "shuffle_lambda_pdy" + lam;
    case ProductTag::ShuffleStar: return "shuffle_star";
    case ProductTag::OOZQuasiShuffle: return "ooz_quasi_shuffle";
    case ProductTag::OOZSquare: return "ooz_square";
    case ProductTag::IharaCirc: return "ihara_circ";
  }
  return "?";
}

Poly multiply(const ProductKind& kind, const Poly& u, const Poly& v) {
  switch (kind.tag) {
    case ProductTag::Shuffle: return shuffle(u, v);
    case ProductTag::QuasiShuffle: return quasi_shuffle(u, v);
    case ProductTag::QuasiShuffleLambda: return quasi_shuffle_lambda(u, v, kind.lambda);
    case ProductTag::ShuffleLambdaPY: return shuffle_lambda_py(u, v, kind.lambda);
    case ProductTag::ShuffleLambdaPDY: return shuffle_lambda_pdy(u, v, kind.lambda);
    case ProductTag::ShuffleStar: return shuffle_star(u, v);
    case ProductTag::OOZQuasiShuffle: return ooz_quasi_shuffle(u, v);
    case ProductTag::OOZSquare: return ooz_square(u, v);
    case ProductTag::IharaCirc: return ihara_circ(u, v);
  }
  throw DomainError("unknown product kind");
}

BilinearMap as_bilinear(const ProductKind& kind) {
  return [kind](const Poly& u, const Poly& v) { return multiply(kind, u, v); };
}

void clear_product_caches() {
  cache<ShuffleTable>().clear();
  cache<ShuffleLambdaTable>().clear();
  cache<ShuffleStarTable>().clear();
  cache<StuffleTable>().clear();
  cache<OozExplicitTable>().clear();
}

}  // namespace mzv
