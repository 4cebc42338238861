#include "helpers.hpp"
#include "mzvlab/maps.hpp"

using namespace mzv;
using namespace testing;

namespace {

BilinearMap qsh(const Rational& l) {
  return [l](const Poly& u, const Poly& v) { return quasi_shuffle_lambda(u, v, l); };
}

Poly square_lambda(const Poly& u, const Poly& v, const Rational& l) {
  return transferred_product(qsh(l), tau_tilde_poly, tau_tilde_poly, u, v);
}

}  // namespace

TEST_CASE("classical products") {
  CHECK(H2("x0x1 sh x0x1") == H2("2 x0x1x0x1 + 4 x0x0x1x1"));
  CHECK(H2("z{2} * z{2}") == H2("2 z{2}z{2} + z{4}"));
  CHECK(H2("z{1} * z{2}") == H2("z{1}z{2} + z{2}z{1} + z{3}"));
  CHECK(H2("x1 sh x0") == H2("x1x0 + x0x1"));
  CHECK(H2("1 sh x0x1x1") == H2("x0x1x1"));
  CHECK(H2("1 * x0x1x1") == H2("x0x1x1"));
  CHECK(H2("x0x1 sq x0x1") == H2("2 x0x1x0x1 + x0x1x1x1"));
}

TEST_CASE("lambda quasi-shuffle") {
  CHECK(quasi_shuffle_lambda(PY("z{1}"), PY("z{1}"), 1) == PY("2 pypy + ppy"));
  CHECK(quasi_shuffle_lambda(PY("z{1}"), PY("z{1}"), -1) == PY("2 z{1}z{1} - z{2}"));
  CHECK(quasi_shuffle_lambda(PY("z{1}"), PY("z{0}"), 1) == PY("z{1}z{0} + z{0}z{1} + z{1}"));
  CHECK_THROWS_AS(quasi_shuffle_lambda(PY("p"), PY("y"), 1), NotInSubalgebra);
}

TEST_CASE("lambda shuffle on p, y") {
  CHECK(PY("py sh py") == PY("2 pypy + pyy"));
  for (const int l : {1, -1, 3}) CHECK(shuffle_lambda_py(PY("y"), PY("y"), l) == PY("yy"));
  // frozen expansions
  CHECK(shuffle_lambda_py(PY("ppy"), PY("py"), -1) == PY("-ppyy - pypy + 2 ppypy + pyppy"));
  CHECK(shuffle_lambda_py(PY("ppy"), PY("py"), -1) == square_lambda(PY("ppy"), PY("py"), -1));
  CHECK(PY("ppy sh ppy") == PY("ppyy + 2 pppyy + 4 ppypy + 4 pppypy + 2 ppyppy"));
}

TEST_CASE("lambda shuffle with d") {
  for (const int li : {1, -1, 2, -3}) {
    const Rational l(li);
    CHECK(shuffle_lambda_pdy(PDY("d"), PDY("d"), l) == PDY("d") * Rational(-1 / l));
    CHECK(shuffle_lambda_pdy(PDY("d"), PDY("p"), l) == PDY("d") * Rational(-l));
    CHECK(shuffle_lambda_pdy(PDY("y"), PDY("d"), l) == PDY("yd"));
    CHECK(shuffle_lambda_pdy(PDY("1"), PDY("dyp"), l) == PDY("dyp"));
  }
  CHECK_THROWS_AS(shuffle_lambda_pdy(PDY("d"), PDY("d"), 0), DomainError);
}

TEST_CASE("raw pd/dp insertions do not change the product") {
  std::mt19937 rng(3);
  for (int i = 0; i < 150; ++i) {
    const Word u = random_word(rng, Alphabet::PDY, 4);
    const Word v = random_word(rng, Alphabet::PDY, 4);
    std::string ru = u.letters(), rv = v.letters();
    ru.insert(std::uniform_int_distribution<std::size_t>(0, ru.size())(rng), std::string{kP, kD});
    rv.insert(std::uniform_int_distribution<std::size_t>(0, rv.size())(rng), std::string{kD, kP});
    const Rational l(i % 2 == 0 ? 1 : -2);
    CHECK(shuffle_lambda_pdy_raw(ru, rv, l) == shuffle_lambda_pdy(Poly(u), Poly(v), l));
  }
}

TEST_CASE("star shuffle and its alternative form") {
  CHECK(H2("x1 star x1") == H2("2 x1x1 - 2 x0x1"));
  CHECK(H2("x1 star x0") == H2("x1x0 + x0x1 - x0x0 - x1x1"));
  CHECK(H2("1 star x0x1") == H2("x0x1"));
  CHECK(shuffle_star_alt(H2("x1"), H2("x1")) == H2("2 x1x1 - 2 x0x1"));
  CHECK(shuffle_star_alt(H2("x0"), H2("x0")) == H2("2 x0x0 - 2 x1x0"));
  CHECK(shuffle_star_alt(H2("x0x1"), H2("x0x1")) == shuffle_star(H2("x0x1"), H2("x0x1")));
  CHECK(shuffle_star(H2("x0x1"), H2("x0x1")) == H2("2 x0x1x0x1 + 4 x0x0x1x1 - 6 x0x0x0x1"));
  CHECK_THROWS(shuffle_star_alt(H2("1"), H2("x0")));
}

TEST_CASE("T operator and OOZ quasi-shuffle") {
  CHECK(t_op(PY("z{2}z{1}")) == PY("z{2}z{1} - z{1}z{1}"));
  CHECK(t_op(PY("z{1}")) == PY("z{1} - z{0}"));
  CHECK(t_op(PY("z{3}")) == PY("z{3} - z{2}"));
  CHECK(PY("z{1} ooz z{1}") == PY("2 z{1}z{1} - 2 z{1}z{0} + z{2} - z{1}"));
  CHECK(PY("1 ooz z{2}z{1}") == PY("z{2}z{1}"));
  CHECK(PY("z{2} ooz z{1}") == PY("-z{2} + z{3} - z{2}z{0} - z{1}z{1} + z{2}z{1} + z{1}z{2}"));
  const ZPoly a(ZWord{2}), b(ZWord{1});
  CHECK(from_zpoly(ooz_explicit(a, b)) == PY("z{2} ooz z{1}"));
  CHECK(from_zpoly(ooz_explicit(ZPoly(ZWord{1}), ZPoly(ZWord{1}))) == PY("2 z{1}z{1} + z{2} - 2 z{1}z{0} - z{1}"));
  CHECK_THROWS_AS(ooz_quasi_shuffle(PY("y"), PY("py")), NotInSubalgebra);
}

TEST_CASE("Ihara contraction") {
  CHECK(PY("z{2} o z{3}z{1}") == PY("z{5}z{1}"));
  CHECK(PY("z{2} o 1").is_zero());
  CHECK(PY("z{0} o z{1}") == PY("z{1}"));
}

TEST_CASE("transferred products") {
  CHECK(square_lambda(PY("py"), PY("py"), 1) == PY("py sh py"));
  CHECK(square_lambda(PY("ppy"), PY("py"), -1) == shuffle_lambda_py(PY("ppy"), PY("py"), -1));
  CHECK(ooz_square(PY("py"), PY("py")) == PY("2 pypy + pyy - 2 ppy - py"));
  CHECK(ooz_square_four_term(PY("py"), PY("py")) == ooz_square(PY("py"), PY("py")));
  CHECK(ooz_square(PY("1"), PY("ppy")) == PY("ppy"));
  CHECK(block_map(weight_projection(ooz_square(PY("py"), PY("py")), 2)) == H2("x1 star x1"));
}

TEST_CASE("product laws on random inputs") {
  std::mt19937 rng(17);
  auto h1 = [&](Alphabet a, int len) {
    Poly p(a);
    for (int i = 0; i < 2; ++i) {
      Word w = random_word(rng, a, len);
      if (!is_z_decodable(w)) w = w * Word(a, {kY});
      p += Poly(w, i + 1);
    }
    return p;
  };
  for (int i = 0; i < 40; ++i) {
    const Poly u = h1(Alphabet::PY, 3), v = h1(Alphabet::PY, 3), w = h1(Alphabet::PY, 2);
    for (const int l : {1, -1, 2}) {
      const auto m = qsh(l);
      CHECK(m(u, v) == m(v, u));
      CHECK(m(m(u, v), w) == m(u, m(v, w)));
      const auto sh = [l](const Poly& a, const Poly& b) { return shuffle_lambda_py(a, b, l); };
      CHECK(sh(u, v) == sh(v, u));
      CHECK(sh(sh(u, v), w) == sh(u, sh(v, w)));
    }
    const Poly a = random_poly(rng, Alphabet::H2, 3), b = random_poly(rng, Alphabet::H2, 3);
    CHECK(shuffle_star(a, b) == shuffle_star(b, a));
    CHECK(shuffle(a, shuffle(b, a)) == shuffle(shuffle(a, b), a));
  }
}

TEST_CASE("generic product dispatch") {
  CHECK(multiply({ProductTag::Shuffle}, H2("x0"), H2("x1")) == H2("x0x1 + x1x0"));
  CHECK(multiply({ProductTag::ShuffleLambdaPDY, 2}, PDY("d"), PDY("d")) == PDY("-1/2 d"));
  CHECK(as_bilinear({ProductTag::IharaCirc})(PY("z{2}"), PY("z{3}")) == PY("z{5}"));
  CHECK_THROWS(multiply({ProductTag::QuasiShuffle}, PY("py"), PY("py")));
}
