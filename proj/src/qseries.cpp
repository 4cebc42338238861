#include "mzvlab/qseries.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <tuple>

namespace mzv {

// --- QPoly -------------------------------------------------------------------

QPoly::QPoly(int order) : order_(order), c_(static_cast<std::size_t>(order + 1)) {
  if (order < 0) throw DomainError("QPoly: order must be >= 0");
}

QPoly::QPoly(int order, std::vector<Rational> coeffs) : QPoly(order) {
  const std::size_t n = std::min(coeffs.size(), c_.size());
  for (std::size_t i = 0; i < n; ++i) c_[i] = std::move(coeffs[i]);
}

QPoly QPoly::one(int order) { return monomial(order, 0); }

QPoly QPoly::monomial(int order, int exponent, const Rational& c) {
  QPoly out(order);
  if (exponent >= 0 && exponent <= order) out[exponent] = c;
  return out;
}

bool QPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

QPoly QPoly::truncated(int order) const {
  return QPoly(order, std::vector<Rational>(c_.begin(), c_.begin() + std::min(order, order_) + 1));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i <= order_; ++i) c_[i] += o[i];
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i <= order_; ++i) c_[i] -= o[i];
  return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  const int n = std::min(a.order(), b.order());
  QPoly out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

bool QPoly::operator==(const QPoly& o) const {
  const int n = std::min(order_, o.order_);
  for (int i = 0; i <= n; ++i) {
    if (c_[i] != o[i]) return false;
  }
  return true;
}

QPoly& QPoly::scale_geometric(int m, int k, int shift) {
  if (m < 1) throw DomainError("scale_geometric: m must be >= 1");
  if (shift > order_) {
    for (auto& x : c_) x = 0;
    return *this;
  }
  for (int r = 0; r < k; ++r) {
    for (int i = m; i <= order_; ++i) c_[i] += c_[i - m];
  }
  for (int r = 0; r < -k; ++r) {
    for (int i = order_; i >= m; --i) c_[i] -= c_[i - m];
  }
  if (shift > 0) {
    for (int i = order_; i >= shift; --i) c_[i] = c_[i - shift];
    for (int i = 0; i < shift; ++i) c_[i] = 0;
  }
  return *this;
}

long double QPoly::evaluate(long double q) const {
  long double acc = 0;
  for (int i = order_; i >= 0; --i) acc = acc * q + static_cast<long double>(c_[i].get_d());
  return acc;
}

std::string QPoly::to_string() const {
  std::string out;
  for (int i = 0; i <= order_; ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += to_display_string(mag);
      continue;
    }
    if (mag != 1) out += to_display_string(mag);
    out += "q";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// --- models --------------------------------------------------------------------

std::string_view model_name(Model m) {
  switch (m) {
    case Model::SZ: return "SZ";
    case Model::SZstar: return "SZstar";
    case Model::BZ: return "BZ";
    case Model::OOZ: return "OOZ";
  }
  return "?";
}

Model parse_model(std::string_view name) {
  std::string s;
  for (const char ch : name) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (s == "SZ") return Model::SZ;
  if (s == "SZSTAR" || s == "SZ*" || s == "SZ,STAR") return Model::SZstar;
  if (s == "BZ") return Model::BZ;
  if (s == "OOZ") return Model::OOZ;
  throw DomainError("unknown model '" + std::string(name) + "'");
}

void check_admissible(Model m, const Composition& c) {
  for (std::size_t j = 0; j < c.size(); ++j) {
    const int k = c.parts[j];
    bool ok = true;
    switch (m) {
      case Model::SZ:
      case Model::SZstar: ok = j == 0 ? k >= 1 : k >= 0; break;
      case Model::BZ: ok = j == 0 ? k >= 2 : k >= 1; break;
      case Model::OOZ: break;
    }
    if (!ok) {
      throw DomainError(c.to_string() + " is not admissible for the " + std::string(model_name(m)) +
                        " model");
    }
  }
}

namespace {

int numerator_exponent(Model model, std::size_t j, int k, int m) {
  switch (model) {
    case Model::SZ:
    case Model::SZstar: return k * m;
    case Model::BZ: return (k - 1) * m;
    case Model::OOZ: return j == 0 ? m : 0;
  }
  return 0;
}

using ZetaKey = std::tuple<int, std::vector<int>, int>;

std::map<ZetaKey, QPoly>& zeta_cache() {
  thread_local std::map<ZetaKey, QPoly> table;
  return table;
}

QPoly zeta_q_uncached(Model model, const Composition& c, int N) {
  const std::size_t n = c.size();
  if (n == 0) return QPoly::one(N);
  const bool weak = model == Model::SZstar;
  // inner[m] = sum over admissible (m_{j+1}, ...) below m of the inner levels
  std::vector<QPoly> level(static_cast<std::size_t>(N + 1), QPoly(N));
  for (std::size_t jj = n; jj-- > 0;) {
    std::vector<QPoly> next(static_cast<std::size_t>(N + 1), QPoly(N));
    QPoly running(N);  // sum_{m' < m} level_{j+1}(m')
    for (int m = 1; m <= N; ++m) {
      QPoly base(N);
      if (jj + 1 == n) {
        base = QPoly::one(N);
      } else {
        if (weak) running += level[m];
        base = running;
        if (!weak) running += level[m];
      }
      base.scale_geometric(m, c.parts[jj], numerator_exponent(model, jj, c.parts[jj], m));
      next[m] = std::move(base);
    }
    level = std::move(next);
  }
  QPoly out(N);
  for (int m = 1; m <= N; ++m) out += level[m];
  return out;
}

}  // namespace

QPoly zeta_q(Model model, const Composition& c, int N) {
  if (N < 1) throw DomainError("zeta_q: order must be >= 1");
  check_admissible(model, c);
  auto& table = zeta_cache();
  ZetaKey key{static_cast<int>(model), c.parts, N};
  if (auto it = table.find(key); it != table.end()) return it->second;
  return table.emplace(std::move(key), zeta_q_uncached(model, c, N)).first->second;
}

QPoly eval_word(Model model, const Poly& p, int N) {
  const Alphabet expected = model == Model::BZ ? Alphabet::H2 : Alphabet::PY;
  require_alphabet(p, expected, std::string("eval_word(") + std::string(model_name(model)) + ")");
  QPoly out(N);
  for (const Word& w : p.words()) {
    if (!w.empty() && w.letters().front() != 0) {
      throw NotInSubalgebra("eval_word: " + w.to_string() + " is not a convergent word");
    }
    out += zeta_q(model, z_decode(w), N) * p.coeff(w);
  }
  return out;
}

QPoly rota_baxter_eval_ooz(const Composition& c, int N) {
  if (N < 1) throw DomainError("rota_baxter_eval_ooz: order must be >= 1");
  for (const int k : c.parts) {
    if (k < 0) throw DomainError("rota_baxter_eval_ooz: negative operator exponent in " + c.to_string());
  }
  if (c.empty()) return QPoly::one(N);
  // f[i] is the coefficient of t^i, a series in q; only i <= N survives t = q.
  std::vector<QPoly> f(static_cast<std::size_t>(N + 1), QPoly(N));
  f[0] = QPoly::one(N);
  auto multiply_y = [&]() {
    // y(t) = t + t^2 + ...
    std::vector<QPoly> g(static_cast<std::size_t>(N + 1), QPoly(N));
    QPoly running(N);
    for (int i = 1; i <= N; ++i) {
      running += f[i - 1];
      g[i] = running;
    }
    f = std::move(g);
  };
  auto apply_p = [&]() {
    // P[t^i] = t^i / (1 - q^i)
    if (!f[0].is_zero()) throw DomainError("rota_baxter_eval_ooz: P applied to a constant term");
    for (int i = 1; i <= N; ++i) f[i].scale_geometric(i, 1, 0);
  };
  for (std::size_t jj = c.size(); jj-- > 0;) {
    multiply_y();
    for (int r = 0; r < c.parts[jj]; ++r) apply_p();
  }
  QPoly out(N);
  for (int i = 1; i <= N; ++i) {
    QPoly shifted = f[i];
    shifted.scale_geometric(1, 0, i);
    out += shifted;
  }
  return out;
}

namespace {

void check_classical(const Composition& c, long M, const char* who) {
  if (c.parts.front() < 2) throw DomainError(std::string(who) + ": divergent composition " + c.to_string());
  for (const int k : c.parts) {
    if (k < 1) throw DomainError(std::string(who) + ": parts must be >= 1 in " + c.to_string());
  }
  if (c.size() > 4) throw DomainError(std::string(who) + ": depth must be <= 4");
  if (M < 1) throw DomainError(std::string(who) + ": cutoff must be >= 1");
}

/// Partial sums over m1 <= checkpoints[i] (checkpoints increasing), one pass.
std::vector<long double> partial_sums(const Composition& c, const std::vector<long>& checkpoints) {
  const std::size_t n = c.size();
  // acc[j] = sum over m' <= m of the nested sum of levels j..n-1
  std::vector<long double> acc(n + 1, 0.0L);
  acc[n] = 1.0L;
  std::vector<long double> val(n);
  const int kmax = *std::max_element(c.parts.begin(), c.parts.end());
  std::vector<long double> inv_pow(static_cast<std::size_t>(kmax + 1));
  std::vector<long double> out;
  std::size_t next = 0;
  for (long m = 1; next < checkpoints.size(); ++m) {
    const long double inv = 1.0L / static_cast<long double>(m);
    inv_pow[0] = 1.0L;
    for (int k = 1; k <= kmax; ++k) inv_pow[k] = inv_pow[k - 1] * inv;
    for (std::size_t j = 0; j < n; ++j) val[j] = acc[j + 1] * inv_pow[c.parts[j]];
    for (std::size_t j = 0; j < n; ++j) acc[j] += val[j];
    while (next < checkpoints.size() && checkpoints[next] == m) {
      out.push_back(acc[0]);
      ++next;
    }
  }
  return out;
}

// Solves the square system a x = b by Gaussian elimination with partial pivoting.
std::vector<long double> solve(std::vector<std::vector<long double>> a, std::vector<long double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const long double f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<long double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    long double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace

FloatEstimate zeta_classical_float(const Composition& c, long M) {
  if (c.empty()) return {1.0L, 0.0L};
  check_classical(c, M, "zeta_classical_float");
  const long double sum = partial_sums(c, {M}).front();
  // inner sums are at most (1 + ln m)^d; integrate the tail against m^{-k1}
  const long double L = 1.0L + std::log(static_cast<long double>(M));
  const int d = static_cast<int>(c.size()) - 1;
  long double bound = 0;
  long double falling = 1;
  for (int j = 0; j <= d; ++j) {
    bound += falling * std::pow(L, d - j);
    falling *= static_cast<long double>(d - j);
  }
  bound /= std::pow(static_cast<long double>(M), c.parts.front() - 1);
  return {sum, bound};
}

ExtrapolatedEstimate zeta_classical_extrapolated(const Composition& c, long M) {
  if (c.empty()) return {1.0L, 0.0L};
  check_classical(c, M, "zeta_classical_extrapolated");
  const std::size_t unknowns = c.size() + 1;
  // one spare checkpoint for the spread estimate
  std::vector<long> cps;
  for (std::size_t i = unknowns + 1; i-- > 0;) cps.push_back(M >> i);
  if (cps.front() < 16) throw DomainError("zeta_classical_extrapolated: cutoff too small");
  const std::vector<long double> sums = partial_sums(c, cps);
  const long double log_top = std::log(static_cast<long double>(M));
  auto fit = [&](std::size_t first) {
    std::vector<std::vector<long double>> a(unknowns, std::vector<long double>(unknowns));
    std::vector<long double> b(unknowns);
    for (std::size_t r = 0; r < unknowns; ++r) {
      const long double m = static_cast<long double>(cps[first + r]);
      const long double scale = std::pow(m, -(c.parts.front() - 1));
      const long double t = std::log(m) - log_top;
      a[r][0] = 1.0L;
      for (std::size_t j = 1; j < unknowns; ++j) a[r][j] = scale * std::pow(t, static_cast<int>(j - 1));
      b[r] = sums[first + r];
    }
    return solve(std::move(a), std::move(b)).front();
  };
  const long double hi = fit(1);
  const long double lo = fit(0);
  return {hi, std::fabs(hi - lo)};
}

LimitReport limit_scaling_check(Model model, const Composition& c, const std::vector<double>& qs, int N) {
  LimitReport report{};
  const QPoly series = zeta_q(model, c, N);
  const int weight = c.weight();
  for (const double q : qs) {
    const long double v = series.evaluate(q) * std::pow(1.0L - q, weight);
    report.samples.push_back({q, static_cast<double>(v)});
  }
  report.target = static_cast<double>(zeta_classical_float(c, 100000).value);
  return report;
}

void clear_qseries_caches() { zeta_cache().clear(); }

}  // namespace mzv
