#include <cmath>

#include "helpers.hpp"
#include "mzvlab/json_io.hpp"
#include "mzvlab/maps.hpp"
#include "mzvlab/qseries.hpp"

using namespace mzv;
using namespace testing;

namespace {

QPoly Q(int order, std::vector<int> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return QPoly(order, r);
}

// coefficient of q^n in sum_{k,l >= 1} f(k) q^{kl}
QPoly divisor_sum(int N, const std::function<long(long)>& f) {
  std::vector<Rational> c(static_cast<std::size_t>(N + 1));
  for (int n = 1; n <= N; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (n % k == 0) c[n] += static_cast<long>(f(k));
    }
  }
  return QPoly(N, c);
}

}  // namespace

TEST_CASE("truncated series arithmetic") {
  const QPoly a = Q(4, {1, 1, 0, 0, 0});
  const QPoly b = Q(3, {1, -1, 0, 0});
  CHECK((a * b) == Q(3, {1, 0, -1, 0}));
  CHECK((a * b).order() == 3);
  QPoly g = QPoly::one(6);
  g.scale_geometric(2, 1, 0);  // 1 / (1 - q^2)
  CHECK(g == Q(6, {1, 0, 1, 0, 1, 0, 1}));
  g.scale_geometric(2, -1, 1);
  CHECK(g == Q(6, {0, 1, 0, 0, 0, 0, 0}));
  CHECK(Q(4, {0, 1, 4, 7, 14}).to_string() == "q + 4q^2 + 7q^3 + 14q^4");
  CHECK(QPoly(3).to_string() == "0");
  CHECK(qpoly_from_json(qpoly_to_json(Q(3, {1, -2, 0, 5}))) == Q(3, {1, -2, 0, 5}));
  CHECK(qpoly_to_json(Q(1, {0, 3}))["coeffs"] == Json::array({"0/1", "3/1"}));
}

TEST_CASE("model values") {
  CHECK(zeta_q(Model::SZ, {2}, 4) == Q(4, {0, 0, 1, 2, 4}));
  CHECK(zeta_q(Model::OOZ, {3}, 4) == Q(4, {0, 1, 4, 7, 14}));
  CHECK(zeta_q(Model::OOZ, {}, 5) == QPoly::one(5));
  CHECK(zeta_q(Model::SZ, {2}, 30) == divisor_sum(30, [](long k) { return k - 1; }));
  CHECK(zeta_q(Model::OOZ, {3}, 30) == divisor_sum(30, [](long k) { return k * (k + 1) / 2; }));
  CHECK(zeta_q(Model::BZ, {2}, 30) == divisor_sum(30, [](long k) { return k; }));
  CHECK(zeta_q(Model::OOZ, {1}, 30) == divisor_sum(30, [](long) { return 1; }));
  // frozen expansions
  CHECK(zeta_q(Model::OOZ, {2, 1}, 10) == Q(10, {0, 0, 1, 3, 7, 10, 19, 21, 35, 39, 56}));
  CHECK(zeta_q(Model::SZ, {2, 1}, 10) == Q(10, {0, 0, 0, 0, 0, 1, 1, 4, 5, 8, 12}));
  CHECK(zeta_q(Model::BZ, {3, 1}, 10) == Q(10, {0, 0, 0, 0, 1, 1, 6, 5, 15, 18, 31}));
  CHECK(zeta_q(Model::SZstar, {2}, 10) == zeta_q(Model::SZ, {2}, 10));
  CHECK(zeta_q(Model::OOZ, {-1}, 6) == Q(6, {0, 1, 0, 1, 0, 1, 0}));
}

TEST_CASE("admissibility") {
  CHECK_THROWS_AS(zeta_q(Model::SZ, {0}, 5), DomainError);
  CHECK_THROWS_AS(zeta_q(Model::BZ, {1}, 5), DomainError);
  CHECK_THROWS_AS(zeta_q(Model::BZ, {2, 0}, 5), DomainError);
  CHECK_NOTHROW(zeta_q(Model::SZ, {1, 0}, 5));
  CHECK_NOTHROW(zeta_q(Model::OOZ, {0, -2}, 5));
  CHECK_THROWS_AS(eval_word(Model::SZ, PY("yp"), 5), NotInSubalgebra);
  CHECK_THROWS_AS(eval_word(Model::BZ, PY("py"), 5), AlphabetMismatch);
  CHECK(parse_model("sz*") == Model::SZstar);
  CHECK_THROWS_AS(parse_model("XZ"), DomainError);
}

TEST_CASE("word evaluation") {
  CHECK(eval_word(Model::SZ, PY("ppy - pyy"), 30).is_zero());
  CHECK(eval_word(Model::OOZ, PY("z{3} - z{2}z{1} - z{2}"), 30).is_zero());
  CHECK(eval_word(Model::SZ, PY("1"), 12) == QPoly::one(12));
  CHECK(eval_word(Model::OOZ, embed_J(H2("z{3}")), 20) == eval_word(Model::BZ, map_U(H2("z{3}")), 20));
}

TEST_CASE("Rota-Baxter evaluator") {
  CHECK(rota_baxter_eval_ooz({1}, 10) == divisor_sum(10, [](long) { return 1; }));
  for (const Composition& c : compositions(4, 0, 0, 4, 5)) {
    CHECK(rota_baxter_eval_ooz(c, 15) == zeta_q(Model::OOZ, c, 15));
  }
  CHECK_THROWS_AS(rota_baxter_eval_ooz({2, -1}, 10), DomainError);
}

TEST_CASE("classical oracle") {
  const FloatEstimate z2 = zeta_classical_float({2}, 100000);
  const long double pi = 3.141592653589793238462643383279502884L;
  CHECK(z2.value <= pi * pi / 6);
  CHECK(z2.value + z2.error_bound >= pi * pi / 6);
  CHECK(std::fabs(static_cast<double>(z2.value) - 1.644934) < 1e-5);
  const FloatEstimate a = zeta_classical_float({2, 1}, 100000);
  const FloatEstimate b = zeta_classical_float({3}, 100000);
  CHECK(std::fabs(static_cast<double>(a.value - b.value)) <= 2 * static_cast<double>(a.error_bound + b.error_bound));
  const ExtrapolatedEstimate c = zeta_classical_extrapolated({2, 1, 1}, 1000000);
  CHECK(std::fabs(static_cast<double>(c.value - pi * pi * pi * pi / 90)) < 1e-8);
  CHECK_THROWS_AS(zeta_classical_float({1, 2}, 10), DomainError);
  CHECK_THROWS_AS(zeta_classical_float({2, 1, 1, 1, 1}, 10), DomainError);
}

TEST_CASE("limit diagnostic") {
  const LimitReport r = limit_scaling_check(Model::OOZ, {2});
  REQUIRE(r.samples.size() == 3);
  CHECK(std::isfinite(r.samples[0].scaled));
  CHECK(r.target == doctest::Approx(1.6449).epsilon(1e-3));
  // moves toward the classical value as q grows
  CHECK(std::fabs(r.samples[2].scaled - r.target) < std::fabs(r.samples[0].scaled - r.target));
}
