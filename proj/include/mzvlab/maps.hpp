#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mzvlab/words.hpp"

namespace mzv {

/// Reverse and swap x0 <-> x1 (H2).
Word tau(const Word& w);
Poly tau(const Poly& p);
/// Reverse and swap p <-> y (PY).
Word tau_tilde(const Word& w);
Poly tau_tilde(const Poly& p);

// Unambiguous names, convenient where a LinearMap is expected.
Poly tau_poly(const Poly& p);
Poly tau_tilde_poly(const Poly& p);

/// d_n(x0) = x0 (x0+x1)^{n-1} x1, d_n(x1) = -d_n(x0), extended by Leibniz.
Poly derivation(const Poly& p, int n);

// Binomial transfer maps. U acts on h0 (H2), V on H0 (PY).
Poly map_U(const Poly& p);
Poly map_U_inv(const Poly& p);
Poly map_V(const Poly& p);
Poly map_V_inv(const Poly& p);

/// S(z_k w) = z_k S(w) + z_k o S(w) on H1; S(1) = 1.
Poly ihara_S(const Poly& p);
/// S^{-1}(z_k w) = z_k S^{-1}(w) - z_k o S^{-1}(w).
Poly ihara_S_inv(const Poly& p);

/// V^{-1} tau_tilde V on H0.
Poly dual_family_1(const Poly& p);
/// U^{-1} tau U on h0.
Poly dual_family_2(const Poly& p);

struct NamedMap {
  std::string name;
  Alphabet domain;
  LinearMap apply;
};

/// tau, tautilde, dn:<n>, U, Uinv, V, Vinv, S, Sinv, dual1, dual2.
/// Throws DomainError for unknown names.
NamedMap named_map(std::string_view name);
std::vector<std::string> map_names();

}  // namespace mzv
