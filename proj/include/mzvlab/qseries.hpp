#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mzvlab/words.hpp"

namespace mzv {

/// Power series in q known exactly through q^order.
class QPoly {
 public:
  explicit QPoly(int order);
  QPoly(int order, std::vector<Rational> coeffs);  // padded/truncated to order + 1

  static QPoly one(int order);
  static QPoly monomial(int order, int exponent, const Rational& c = 1);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  QPoly truncated(int order) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);

  /// Equal through the smaller of the two orders.
  bool operator==(const QPoly& o) const;

  /// Multiply by q^{shift} (1 - q^m)^{-k}; k may be negative.
  QPoly& scale_geometric(int m, int k, int shift);

  long double evaluate(long double q) const;

  std::string to_string() const;  // "q + 4q^2 + 7q^3"

 private:
  int order_;
  std::vector<Rational> c_;
};

enum class Model { SZ, SZstar, BZ, OOZ };

std::string_view model_name(Model m);
/// Accepts SZ, SZstar (also SZ*), BZ, OOZ, case-insensitive.
Model parse_model(std::string_view name);

/// Throws DomainError if the composition is not admissible for the model.
void check_admissible(Model m, const Composition& c);

/// Exact truncation of the defining nested sum through q^N.
QPoly zeta_q(Model model, const Composition& c, int N);

/// Linear extension over words. BZ reads H2 words (z_k = x0^{k-1} x1), the
/// other models read PY words (z_k = p^k y).
QPoly eval_word(Model model, const Poly& p, int N);

/// OOZ values through iterated P[f](t) = sum_{m>=0} f(q^m t) on series in t,
/// evaluated at t = q. Parts must be >= 0.
QPoly rota_baxter_eval_ooz(const Composition& c, int N);

struct FloatEstimate {
  long double value;
  long double error_bound;  // true value lies in [value, value + error_bound]
};

/// Partial sum over m1 <= M of the classical nested sum, with a tail bound.
FloatEstimate zeta_classical_float(const Composition& c, long M);

struct ExtrapolatedEstimate {
  long double value;
  long double spread;  // change against the fit one checkpoint lower; heuristic, not a bound
};

/// Fits partial sums at M, M/2, ... to value + P(log m) / m^{k1-1}, deg P < depth.
ExtrapolatedEstimate zeta_classical_extrapolated(const Composition& c, long M);

struct LimitSample {
  double q;
  double scaled;  // (1-q)^weight * truncated series at q
};

struct LimitReport {
  std::vector<LimitSample> samples;
  double target;
};

LimitReport limit_scaling_check(Model model, const Composition& c,
                                const std::vector<double>& qs = {0.5, 0.7, 0.9}, int N = 200);

void clear_qseries_caches();

}  // namespace mzv
