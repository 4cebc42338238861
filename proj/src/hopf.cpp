#include "mzvlab/hopf.hpp"

#include <unordered_map>

#include "mzvlab/maps.hpp"
#include "mzvlab/products.hpp"

namespace mzv {

// --- Tensor2 / Tensor3 -------------------------------------------------------

void Tensor2::add_term(const std::string& left, const std::string& right, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Tensor2::add_term(const Word& left, const Word& right, const Rational& c) {
  require_alphabet(left, alphabet_, "Tensor2");
  require_alphabet(right, alphabet_, "Tensor2");
  add_term(left.letters(), right.letters(), c);
}

void Tensor2::add_product(const Poly& a, const Poly& b, const Rational& c) {
  require_alphabet(a, alphabet_, "Tensor2");
  require_alphabet(b, alphabet_, "Tensor2");
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) add_term(wa, wb, c * ca * cb);
  }
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

Tensor2& Tensor2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& kv : terms_) kv.second *= c;
  }
  return *this;
}

Tensor2 Tensor2::relabel(Alphabet target) const {
  Tensor2 out(target);
  for (const auto& [k, c] : terms_) {
    out.add_term(Word(target, k.first), Word(target, k.second), c);
  }
  return out;
}

namespace {

std::string word_text(Alphabet a, const std::string& letters) { return Word(a, letters).to_string(); }

template <typename Terms, typename Render>
std::string render_terms(const Terms& terms, Render&& render) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) out += to_display_string(mag) + " ";
    out += render(k);
  }
  return out;
}

}  // namespace

std::string Tensor2::to_string() const {
  return render_terms(terms_, [this](const Key& k) {
    return word_text(alphabet_, k.first) + " ⊗ " + word_text(alphabet_, k.second);
  });
}

void Tensor3::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string Tensor3::to_string() const {
  return render_terms(terms_, [this](const Key& k) {
    return word_text(alphabet_, k[0]) + " ⊗ " + word_text(alphabet_, k[1]) + " ⊗ " +
           word_text(alphabet_, k[2]);
  });
}

// --- deconcatenation ------------------------------------------------------------

Tensor2 deconcat(const Poly& p) {
  Tensor2 out(p.alphabet());
  for (const auto& [w, c] : p.terms()) {
    const Word word(p.alphabet(), w);
    if (!is_z_decodable(word)) {
      throw NotInSubalgebra("deconcat: " + word.to_string() + " is not z-decodable");
    }
    out.add_term(std::string(), w, c);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 1) out.add_term(w.substr(0, i + 1), w.substr(i + 1), c);
    }
  }
  return out;
}

Rational counit(const Poly& p) { return p.coeff(Word(p.alphabet())); }

Tensor2 map_tensor(const Tensor2& t, const LinearMap& f, const LinearMap& g, Alphabet target) {
  Tensor2 out(target);
  for (const auto& [k, c] : t.terms()) {
    out.add_product(f(Poly(Word(t.alphabet(), k.first))), g(Poly(Word(t.alphabet(), k.second))), c);
  }
  return out;
}

Tensor2 flip(const Tensor2& t) {
  Tensor2 out(t.alphabet());
  for (const auto& [k, c] : t.terms()) out.add_term(k.second, k.first, c);
  return out;
}

Poly contract(const Tensor2& t, const BilinearMap& m) {
  Poly out(t.alphabet());
  for (const auto& [k, c] : t.terms()) {
    out += m(Poly(Word(t.alphabet(), k.first)), Poly(Word(t.alphabet(), k.second))) * c;
  }
  return out;
}

Tensor2 tensor_multiply(const Tensor2& x, const Tensor2& y, const BilinearMap& m) {
  const Alphabet a = x.alphabet();
  Tensor2 out(a);
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const Poly left = m(Poly(Word(a, kx.first)), Poly(Word(a, ky.first)));
      const Poly right = m(Poly(Word(a, kx.second)), Poly(Word(a, ky.second)));
      out.add_product(left, right, cx * cy);
    }
  }
  return out;
}

Tensor3 coproduct_left(const Tensor2& t, const Coproduct& delta) {
  Tensor3 out(t.alphabet());
  for (const auto& [k, c] : t.terms()) {
    const Tensor2 inner = delta(Poly(Word(t.alphabet(), k.first)));
    for (const auto& [ki, ci] : inner.terms()) out.add_term({ki.first, ki.second, k.second}, c * ci);
  }
  return out;
}

Tensor3 coproduct_right(const Tensor2& t, const Coproduct& delta) {
  Tensor3 out(t.alphabet());
  for (const auto& [k, c] : t.terms()) {
    const Tensor2 inner = delta(Poly(Word(t.alphabet(), k.second)));
    for (const auto& [ki, ci] : inner.terms()) out.add_term({k.first, ki.first, ki.second}, c * ci);
  }
  return out;
}

// --- antipodes ---------------------------------------------------------------------

namespace {

using AntipodeTable = std::unordered_map<std::string, Poly>;

AntipodeTable& antipode_table() {
  thread_local AntipodeTable table;
  return table;
}

const Poly& antipode_word(const std::string& w, Alphabet a, const std::string& tag,
                          const BilinearMap& m) {
  auto& table = antipode_table();
  const std::string key = tag + "|" + w;
  if (auto it = table.find(key); it != table.end()) return it->second;
  Poly out(a);
  if (w.empty()) {
    out = Poly::unit(a);
  } else {
    // cut after every z-block except the last: w = w1 w2 with w2 != 1
    out -= Poly(Word(a, w));
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] != 1) continue;
      const Poly s1 = antipode_word(w.substr(0, i + 1), a, tag, m);
      out -= m(s1, Poly(Word(a, w.substr(i + 1))));
    }
  }
  return table.emplace(key, std::move(out)).first->second;
}

Poly antipode_impl(const Poly& p, Alphabet a, const std::string& tag, const BilinearMap& m) {
  require_alphabet(p, a, "antipode");
  Poly out(a);
  for (const auto& [w, c] : p.terms()) {
    if (!is_z_decodable(Word(a, w))) {
      throw NotInSubalgebra("antipode: " + Word(a, w).to_string() + " is not z-decodable");
    }
    out += antipode_word(w, a, tag, m) * c;
  }
  return out;
}

}  // namespace

Poly antipode(const Poly& p, const Rational& lambda) {
  return antipode_impl(p, Alphabet::PY, "PY" + lambda.get_str(),
                       [lambda](const Poly& u, const Poly& v) { return quasi_shuffle_lambda(u, v, lambda); });
}

Poly antipode_classical(const Poly& p) {
  return antipode_impl(p, Alphabet::H2, "H2", quasi_shuffle);
}

HopfStructure quasi_shuffle_hopf(const Rational& lambda) {
  return HopfStructure{
      "(H1, *_" + to_display_string(lambda) + ", deconcat)",
      Alphabet::PY,
      [lambda](const Poly& u, const Poly& v) { return quasi_shuffle_lambda(u, v, lambda); },
      deconcat,
      counit,
      [lambda](const Poly& p) { return antipode(p, lambda); },
      Poly::unit(Alphabet::PY),
  };
}

HopfStructure classical_quasi_shuffle_hopf() {
  return HopfStructure{"(h1, *, deconcat)", Alphabet::H2, quasi_shuffle, deconcat,
                       counit, antipode_classical, Poly::unit(Alphabet::H2)};
}

HopfStructure transfer_hopf(const HopfStructure& base, const LinearMap& iso, const LinearMap& iso_inv,
                            const std::string& name) {
  const Poly unit = iso_inv(base.unit);
  if (iso(unit) != base.unit) throw InconsistentIso("transfer_hopf: iso does not fix the unit");
  const Alphabet a = unit.alphabet();
  HopfStructure out{name, a, nullptr, nullptr, nullptr, nullptr, unit};
  out.product = [base, iso, iso_inv](const Poly& u, const Poly& v) {
    return transferred_product(base.product, iso, iso_inv, u, v);
  };
  out.coproduct = [base, iso, iso_inv, a](const Poly& p) {
    const Poly tp = iso(p);
    if (iso_inv(tp) != p) throw InconsistentIso("transfer_hopf: iso_inv o iso is not the identity");
    return map_tensor(base.coproduct(tp), iso_inv, iso_inv, a);
  };
  out.counit = [base, iso](const Poly& p) { return base.counit(iso(p)); };
  out.antipode = [base, iso, iso_inv](const Poly& p) { return iso_inv(base.antipode(iso(p))); };
  return out;
}

std::vector<AxiomFailure> check_hopf_axioms(const HopfStructure& h, const std::vector<Poly>& samples,
                                            const std::vector<std::pair<Poly, Poly>>& pairs) {
  std::vector<AxiomFailure> failures;
  const Alphabet a = h.alphabet;
  auto fail = [&](const std::string& axiom, const Poly& input, const std::string& detail) {
    failures.push_back({axiom, input.to_string(), detail});
  };
  const LinearMap id = [](const Poly& p) { return p; };
  for (const Poly& w : samples) {
    if (h.product(h.unit, w) != w || h.product(w, h.unit) != w) fail("unit", w, "");

    const Tensor2 d = h.coproduct(w);
    Poly left_counit(a);
    Poly right_counit(a);
    for (const auto& [k, c] : d.terms()) {
      left_counit += Poly(Word(a, k.second), c * h.counit(Poly(Word(a, k.first))));
      right_counit += Poly(Word(a, k.first), c * h.counit(Poly(Word(a, k.second))));
    }
    if (left_counit != w) fail("counit (eps x id)", w, left_counit.to_string());
    if (right_counit != w) fail("counit (id x eps)", w, right_counit.to_string());

    const Tensor3 l = coproduct_left(d, h.coproduct);
    const Tensor3 r = coproduct_right(d, h.coproduct);
    if (l != r) fail("coassociativity", w, l.to_string() + " vs " + r.to_string());

    const Poly expected = h.unit * h.counit(w);
    const Poly s_left = contract(map_tensor(d, h.antipode, id, a), h.product);
    const Poly s_right = contract(map_tensor(d, id, h.antipode, a), h.product);
    if (s_left != expected) fail("antipode m(S x id)Delta", w, s_left.to_string());
    if (s_right != expected) fail("antipode m(id x S)Delta", w, s_right.to_string());
  }
  for (const auto& [u, v] : pairs) {
    const Tensor2 lhs = h.coproduct(h.product(u, v));
    const Tensor2 rhs = tensor_multiply(h.coproduct(u), h.coproduct(v), h.product);
    if (lhs != rhs) fail("Delta multiplicative", u, "with " + v.to_string());
    if (h.counit(h.product(u, v)) != h.counit(u) * h.counit(v)) fail("counit multiplicative", u, v.to_string());
  }
  return failures;
}

// --- coproducts of section on {p,d,y} ---------------------------------------------

Tensor2 coproduct_square_op(const Poly& p) {
  require_alphabet(p, Alphabet::PY, "coproduct_square_op");
  if (!membership(p, Subspace::H0)) throw NotInSubalgebra("coproduct_square_op: input must lie in H0");
  const LinearMap tt = tau_tilde_poly;
  return flip(map_tensor(deconcat(tau_tilde(p)), tt, tt, Alphabet::PY));
}

namespace {

using InfTable = std::unordered_map<std::string, Tensor2>;

InfTable& inf_table() {
  thread_local InfTable table;
  return table;
}

// (u (x) 1) t
Tensor2 left_mul(const std::string& u, const Tensor2& t) {
  Tensor2 out(Alphabet::PDY);
  for (const auto& [k, c] : t.terms()) {
    out.add_term(normalize_letters(Alphabet::PDY, u + k.first), k.second, c);
  }
  return out;
}

// t (1 (x) v)
Tensor2 right_mul(const Tensor2& t, const std::string& v) {
  Tensor2 out(Alphabet::PDY);
  for (const auto& [k, c] : t.terms()) {
    out.add_term(k.first, normalize_letters(Alphabet::PDY, k.second + v), c);
  }
  return out;
}

Tensor2 generator(Letter l) {
  Tensor2 out(Alphabet::PDY);
  const std::string s(1, l);
  if (l == kP) {
    out.add_term(s, "", 1);
    out.add_term("", s, 1);
  } else if (l == kY) {
    out.add_term(s, "", 1);
  }
  return out;
}

Tensor2 combine(const std::string& u, const Tensor2& du, const std::string& v, const Tensor2& dv) {
  Tensor2 out = left_mul(u, dv);
  out += right_mul(du, v);
  out.add_term(normalize_letters(Alphabet::PDY, u), normalize_letters(Alphabet::PDY, v), -1);
  return out;
}

}  // namespace

Tensor2 infinitesimal_coproduct_raw(const std::string& raw) {
  auto& table = inf_table();
  if (auto it = table.find(raw); it != table.end()) return it->second;
  Tensor2 out(Alphabet::PDY);
  if (raw.empty()) {
    out.add_term("", "", 1);
  } else if (raw.size() == 1) {
    if (!is_letter_of(Alphabet::PDY, raw[0])) normalize_letters(Alphabet::PDY, raw);  // throws
    out = generator(raw[0]);
  } else {
    const std::string u = raw.substr(0, 1);
    const std::string v = raw.substr(1);
    out = combine(u, generator(raw[0]), v, infinitesimal_coproduct_raw(v));
  }
  return table.emplace(raw, out).first->second;
}

Tensor2 infinitesimal_coproduct_split(const std::string& raw, std::size_t split) {
  if (split == 0 || split >= raw.size()) return infinitesimal_coproduct_raw(raw);
  const std::string u = raw.substr(0, split);
  const std::string v = raw.substr(split);
  return combine(u, infinitesimal_coproduct_raw(u), v, infinitesimal_coproduct_raw(v));
}

Tensor2 infinitesimal_coproduct(const Poly& p) {
  require_alphabet(p, Alphabet::PDY, "infinitesimal_coproduct");
  Tensor2 out(Alphabet::PDY);
  for (const auto& [w, c] : p.terms()) {
    Tensor2 t = infinitesimal_coproduct_raw(w);
    t *= c;
    out += t;
  }
  return out;
}

CoidealResult coideal_check(const std::function<bool(const Word&)>& predicate, const Coproduct& delta,
                            CoidealSide side, const std::vector<Word>& samples) {
  CoidealResult result;
  for (const Word& w : samples) {
    const Tensor2 t = delta(Poly(w));
    for (const auto& [k, c] : t.terms()) {
      const Word left(t.alphabet(), k.first);
      const Word right(t.alphabet(), k.second);
      const bool ok = predicate(side == CoidealSide::Left ? right : left);
      if (!ok) {
        result.ok = false;
        result.witness = CoidealWitness{w.to_string(), left.to_string(), right.to_string()};
        return result;
      }
    }
  }
  return result;
}

void clear_hopf_caches() {
  antipode_table().clear();
  inf_table().clear();
}

}  // namespace mzv
