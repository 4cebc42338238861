#include "helpers.hpp"
#include "mzvlab/maps.hpp"

using namespace mzv;
using namespace testing;

TEST_CASE("dualities") {
  CHECK(tau(H2("x0x0x0x0x1x1")) == H2("x0x0x1x1x1x1"));
  CHECK(tau(H2("x0x1")) == H2("x0x1"));
  CHECK(tau(H2("x0x0x1")) == H2("x0x1x1"));
  CHECK(tau_tilde(PY("ppy")) == PY("pyy"));
  CHECK(tau_tilde(PY("py")) == PY("py"));
  CHECK(tau_tilde(PY("pppy")) == PY("pyyy"));
  std::mt19937 rng(1);
  for (int i = 0; i < 100; ++i) {
    const Poly a = random_poly(rng, Alphabet::H2, 7);
    const Poly b = random_poly(rng, Alphabet::PY, 7);
    CHECK(tau(tau(a)) == a);
    CHECK(tau_tilde(tau_tilde(b)) == b);
  }
}

TEST_CASE("derivations") {
  CHECK(derivation(H2("x0x1"), 2) == H2("x0x1x1x1 - x0x0x0x1"));
  CHECK(derivation(H2("x0"), 1) == H2("x0x1"));
  CHECK(derivation(H2("x0x1"), 1) == H2("x0x1x1 - x0x0x1"));
  CHECK(derivation(H2("x0x1"), 3) == H2("-z{5} - z{3}z{2} + z{2}z{2}z{1} + z{2}z{1}z{1}z{1}"));
  CHECK(derivation(H2("1"), 2).is_zero());
  CHECK_THROWS_AS(derivation(H2("x0"), 0), DomainError);
}

TEST_CASE("binomial transfer maps") {
  CHECK(map_U(H2("z{3}")) == H2("z{2} + z{3}"));
  CHECK(map_V(PY("z{3}")) == PY("z{1} + 2 z{2} + z{3}"));
  CHECK(map_U_inv(map_U(H2("z{2}z{1}"))) == H2("z{2}z{1}"));
  CHECK(map_V_inv(map_V(PY("z{1}z{0}"))) == PY("z{1}z{0}"));
  CHECK_THROWS_AS(map_U(H2("x1")), Error);
  CHECK_THROWS_AS(map_V(PY("y")), Error);
  for (const Word& w : convergent_h2(7)) {
    CHECK(map_U_inv(map_U(Poly(w))) == Poly(w));
    CHECK(map_U(map_U_inv(Poly(w))) == Poly(w));
  }
  for (const Word& w : convergent_py(5, 5)) {
    CHECK(map_V_inv(map_V(Poly(w))) == Poly(w));
  }
}

TEST_CASE("OOZ duality families") {
  CHECK(dual_family_2(H2("z{3}")) == H2("z{2}z{1} + z{2}"));
  CHECK(dual_family_2(H2("z{2}")) == H2("z{2}"));
  CHECK(dual_family_2(H2("z{4}")) == H2("z{2} + 2 z{2}z{1} + z{2}z{1}z{1}"));
  CHECK(dual_family_1(PY("z{3}")) == PY("z{1}z{0}z{0} + 2 z{1}z{0} + z{1}"));
  CHECK(dual_family_1(PY("z{1}")) == PY("z{1}"));
  CHECK(dual_family_1(PY("z{2}")) == PY("z{1}z{0} + z{1}"));
  CHECK(dual_family_1(PY("z{4}")) == PY("z{1} + 3 z{1}z{0} + 3 z{1}z{0}z{0} + z{1}z{0}z{0}z{0}"));
  // both families are involutions
  for (const Word& w : convergent_py(4, 4)) CHECK(dual_family_1(dual_family_1(Poly(w))) == Poly(w));
  for (const Word& w : convergent_h2(6)) CHECK(dual_family_2(dual_family_2(Poly(w))) == Poly(w));
}

TEST_CASE("Ihara map") {
  CHECK(ihara_S(PY("z{2}z{1}")) == PY("z{2}z{1} + z{3}"));
  CHECK(ihara_S_inv(PY("z{2}z{1}")) == PY("z{2}z{1} - z{3}"));
  CHECK(ihara_S(PY("z{1}z{1}z{1}")) == PY("z{1}z{1}z{1} + z{1}z{2} + z{2}z{1} + z{3}"));
  CHECK(ihara_S(PY("1")) == PY("1"));
  std::mt19937 rng(4);
  for (int i = 0; i < 60; ++i) {
    Composition c;
    const int n = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int j = 0; j < n; ++j) c.parts.push_back(std::uniform_int_distribution<int>(0, 3)(rng));
    const Poly w(z_encode(c, ZTarget::PY));
    CHECK(ihara_S_inv(ihara_S(w)) == w);
  }
}

TEST_CASE("named maps") {
  CHECK(named_map("tau").apply(H2("z{5}z{1}")) == H2("z{3}z{1}z{1}z{1}"));
  CHECK(named_map("dn:2").apply(H2("x0x1")) == H2("x0x1x1x1 - x0x0x0x1"));
  CHECK(named_map("dual1").domain == Alphabet::PY);
  CHECK(named_map("U").domain == Alphabet::H2);
  CHECK(map_names().size() == 11);
  CHECK_THROWS_AS(named_map("nope"), DomainError);
  CHECK_THROWS(named_map("dn:x"));
}
