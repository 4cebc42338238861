#include "mzvlab/maps.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "mzvlab/products.hpp"

namespace mzv {

namespace {

Word reverse_swap(const Word& w, Alphabet a, std::string_view context) {
  require_alphabet(w, a, context);
  std::string letters(w.letters().rbegin(), w.letters().rend());
  for (auto& l : letters) l = static_cast<Letter>(1 - l);
  return Word(a, letters);
}

// Sum over all r with lo_j <= r_j <= k_j of prod_j weight_j(k_j, r_j) z_r.
Poly binomial_transform(const Composition& c, ZTarget target, int first_lo, int rest_lo,
                        int first_shift, int rest_shift, bool alternate) {
  const std::size_t n = c.size();
  Poly out(target == ZTarget::H2 ? Alphabet::H2 : Alphabet::PY);
  std::vector<int> r(n);
  std::function<void(std::size_t, Integer)> rec = [&](std::size_t j, Integer coef) {
    if (j == n) {
      out.add_term(z_encode(Composition(r), target), Rational(coef));
      return;
    }
    const int lo = j == 0 ? first_lo : rest_lo;
    const int shift = j == 0 ? first_shift : rest_shift;
    const int k = c.parts[j];
    for (int rj = lo; rj <= k; ++rj) {
      Integer b = binomial(k - shift, rj - shift);
      if (b == 0) continue;
      if (alternate && (k - rj) % 2 != 0) b = -b;
      r[j] = rj;
      rec(j + 1, coef * b);
    }
  };
  rec(0, 1);
  return out;
}

Composition admissible(const Word& w, int first_min, int rest_min, std::string_view context) {
  Composition c = z_decode(w);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c.parts[j] < (j == 0 ? first_min : rest_min)) {
      throw DomainError(std::string(context) + ": inadmissible composition " + c.to_string());
    }
  }
  if (!w.empty() && w.letters().front() != 0) {
    throw NotInSubalgebra(std::string(context) + ": " + w.to_string() + " is not convergent");
  }
  return c;
}

Poly map_u_impl(const Poly& p, bool inverse) {
  require_alphabet(p, Alphabet::H2, inverse ? "map_U_inv" : "map_U");
  return p.map_words(
      [inverse](const Word& w) {
        const Composition c = admissible(w, 2, 1, inverse ? "map_U_inv" : "map_U");
        return binomial_transform(c, ZTarget::H2, 2, 1, 2, 1, inverse);
      },
      Alphabet::H2);
}

Poly map_v_impl(const Poly& p, bool inverse) {
  require_alphabet(p, Alphabet::PY, inverse ? "map_V_inv" : "map_V");
  return p.map_words(
      [inverse](const Word& w) {
        const Composition c = admissible(w, 1, 0, inverse ? "map_V_inv" : "map_V");
        return binomial_transform(c, ZTarget::PY, 1, 0, 1, 0, inverse);
      },
      Alphabet::PY);
}

ZPoly ihara_rec(const ZWord& w, int sign) {
  if (w.empty()) return ZPoly::unit();
  const ZWord rest(w.begin() + 1, w.end());
  const ZPoly s = ihara_rec(rest, sign);
  ZPoly out;
  for (const auto& [v, c] : s.terms()) {
    ZWord prefixed{w.front()};
    prefixed.insert(prefixed.end(), v.begin(), v.end());
    out.add_term(prefixed, c);
    if (!v.empty()) {
      ZWord merged = v;
      merged.front() += w.front();
      out.add_term(merged, sign * c);
    }
  }
  return out;
}

Poly ihara_impl(const Poly& p, int sign) {
  require_alphabet(p, Alphabet::PY, sign > 0 ? "ihara_S" : "ihara_S_inv");
  const ZPoly input = to_zpoly(p);
  ZPoly out;
  for (const auto& [w, c] : input.terms()) {
    ZPoly image = ihara_rec(w, sign);
    image *= c;
    out += image;
  }
  return from_zpoly(out);
}

}  // namespace

Word tau(const Word& w) { return reverse_swap(w, Alphabet::H2, "tau"); }
Word tau_tilde(const Word& w) { return reverse_swap(w, Alphabet::PY, "tau_tilde"); }

Poly tau(const Poly& p) {
  require_alphabet(p, Alphabet::H2, "tau");
  return p.map_words([](const Word& w) { return Poly(tau(w)); }, Alphabet::H2);
}

Poly tau_tilde(const Poly& p) {
  require_alphabet(p, Alphabet::PY, "tau_tilde");
  return p.map_words([](const Word& w) { return Poly(tau_tilde(w)); }, Alphabet::PY);
}

Poly tau_poly(const Poly& p) { return tau(p); }
Poly tau_tilde_poly(const Poly& p) { return tau_tilde(p); }

Poly derivation(const Poly& p, int n) {
  if (n < 1) throw DomainError("derivation: n must be >= 1");
  require_alphabet(p, Alphabet::H2, "derivation");
  // x0 (x0 + x1)^{n-1} x1
  Poly generator(Word(Alphabet::H2, {kX0}));
  const Poly sum = Poly(Word(Alphabet::H2, {kX0})) + Poly(Word(Alphabet::H2, {kX1}));
  for (int i = 1; i < n; ++i) generator = concat(generator, sum);
  generator = concat(generator, Word(Alphabet::H2, {kX1}));

  return p.map_words(
      [&](const Word& w) {
        Poly out(Alphabet::H2);
        const std::string& s = w.letters();
        for (std::size_t i = 0; i < s.size(); ++i) {
          const Word prefix(Alphabet::H2, s.substr(0, i));
          const Word suffix(Alphabet::H2, s.substr(i + 1));
          const Poly term = concat(concat(prefix, generator), suffix);
          if (s[i] == kX0) {
            out += term;
          } else {
            out -= term;
          }
        }
        return out;
      },
      Alphabet::H2);
}

Poly map_U(const Poly& p) { return map_u_impl(p, false); }
Poly map_U_inv(const Poly& p) { return map_u_impl(p, true); }
Poly map_V(const Poly& p) { return map_v_impl(p, false); }
Poly map_V_inv(const Poly& p) { return map_v_impl(p, true); }

Poly ihara_S(const Poly& p) { return ihara_impl(p, 1); }
Poly ihara_S_inv(const Poly& p) { return ihara_impl(p, -1); }

Poly dual_family_1(const Poly& p) { return map_V_inv(tau_tilde(map_V(p))); }
Poly dual_family_2(const Poly& p) { return map_U_inv(tau(map_U(p))); }

std::vector<std::string> map_names() {
  return {"tau", "tautilde", "dn:<n>", "U", "Uinv", "V", "Vinv", "S", "Sinv", "dual1", "dual2"};
}

NamedMap named_map(std::string_view name) {
  using A = Alphabet;
  if (name == "tau") return {"tau", A::H2, tau_poly};
  if (name == "tautilde") return {"tautilde", A::PY, tau_tilde_poly};
  if (name == "U") return {"U", A::H2, map_U};
  if (name == "Uinv") return {"Uinv", A::H2, map_U_inv};
  if (name == "V") return {"V", A::PY, map_V};
  if (name == "Vinv") return {"Vinv", A::PY, map_V_inv};
  if (name == "S") return {"S", A::PY, ihara_S};
  if (name == "Sinv") return {"Sinv", A::PY, ihara_S_inv};
  if (name == "dual1") return {"dual1", A::PY, dual_family_1};
  if (name == "dual2") return {"dual2", A::H2, dual_family_2};
  if (name.starts_with("dn:")) {
    const std::string_view digits = name.substr(3);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1) {
      return {std::string(name), A::H2, [n](const Poly& p) { return derivation(p, n); }};
    }
  }
  throw DomainError("unknown map '" + std::string(name) + "'");
}

}  // namespace mzv
