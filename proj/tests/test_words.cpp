#include "helpers.hpp"
#include "mzvlab/json_io.hpp"

using namespace mzv;
using namespace testing;

TEST_CASE("pd and dp cancel on construction") {
  CHECK(Word(Alphabet::PDY, {kP, kD, kY}) == Word(Alphabet::PDY, {kY}));
  CHECK(Word(Alphabet::PDY, {kD, kP, kD, kP}).empty());
  CHECK(Word(Alphabet::PDY, {kP, kY, kD}).to_string() == "pyd");
  CHECK(Word(Alphabet::PDY, {kP, kP, kD, kD, kY}).to_string() == "y");
  CHECK(Word(Alphabet::PDY, {kP, kD, kY}) * Word(Alphabet::PDY, {kD}) == Word(Alphabet::PDY, {kY, kD}));
  CHECK((Word(Alphabet::PDY, {kY, kP}) * Word(Alphabet::PDY, {kD, kY})).to_string() == "yy");
}

TEST_CASE("invalid letters and mixed alphabets throw") {
  CHECK_THROWS_AS(Word(Alphabet::H2, std::string(1, kD)), InvalidLetter);
  CHECK_THROWS_AS(Word(Alphabet::PY, std::string(1, kD)), InvalidLetter);
  CHECK_THROWS_AS(PY("py") + H2("x0x1"), AlphabetMismatch);
  CHECK_THROWS_AS(Word(Alphabet::PY) * Word(Alphabet::H2), AlphabetMismatch);
}

TEST_CASE("grading") {
  CHECK(grading(*PY("ppy").words().begin()) == Grading{2, 1, 3});
  const Grading g = grading(*H2("x0x1x1").words().begin());
  CHECK(g.weight == 3);
  CHECK(g.depth == 2);
  const Grading d = grading(*PDY("dyy").words().begin());
  CHECK(d.weight == -1);
  CHECK(d.depth == 2);
}

TEST_CASE("z-block codec") {
  CHECK(z_encode({2, 1}, ZTarget::H2).to_string() == "x0x1x1");
  CHECK(z_encode({1, 0}, ZTarget::PY).to_string() == "pyy");
  CHECK(z_encode({5, 1}, ZTarget::H2).to_string() == "x0x0x0x0x1x1");
  CHECK(z_decode(*PY("pyy").words().begin()) == Composition{1, 0});
  CHECK(z_decode(*H2("x0x0x1x1x1x1").words().begin()) == Composition{3, 1, 1, 1});
  CHECK(z_decode(Word(Alphabet::PY)).empty());
  CHECK_THROWS_AS(z_encode({0}, ZTarget::H2), EncodingError);
  CHECK_THROWS_AS(z_decode(*PY("pyp").words().begin()), NotInSubalgebra);
  CHECK_THROWS(z_decode(*PDY("dy").words().begin()));
  CHECK_FALSE(is_z_decodable(*H2("x1x0").words().begin()));

  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    for (const Alphabet a : {Alphabet::H2, Alphabet::PY}) {
      const Word w = random_word(rng, a, 8);
      if (!is_z_decodable(w)) continue;
      CHECK(z_encode(z_decode(w), a == Alphabet::H2 ? ZTarget::H2 : ZTarget::PY) == w);
    }
  }
}

TEST_CASE("subspace membership") {
  CHECK(membership(*PY("ppy").words().begin(), Subspace::H0));
  CHECK_FALSE(membership(*H2("x1x0x1").words().begin(), Subspace::h0));
  CHECK(membership(Word(Alphabet::H2), Subspace::h0));
  CHECK(membership(*PY("pyy").words().begin(), Subspace::H0));
  CHECK_FALSE(membership(*PY("y").words().begin(), Subspace::H0));
  CHECK(membership(*PY("y").words().begin(), Subspace::H1));
  CHECK(membership(*PY("p").words().begin(), Subspace::Hm1));
  CHECK_THROWS_AS(membership(*PY("py").words().begin(), Subspace::h0), AlphabetMismatch);
}

TEST_CASE("letter morphisms") {
  CHECK(phi(PY("ppy")) == H2("x0x0x1"));
  CHECK(phi(PY("1")) == H2("1"));
  CHECK(phi(PY("pyy")) == H2("x0x1x1"));
  CHECK(embed_J(H2("x0x1")) == PY("ppy"));
  CHECK(embed_J(H2("x1x1")) == PY("pypy"));
  CHECK(embed_J(H2("x0x0x1")) == PY("pppy"));
  CHECK(block_map(PY("pypy")) == H2("x1x1"));
  CHECK(block_map(PY("ppy")) == H2("x0x1"));
  CHECK(block_map(PY("ppypy")) == H2("x0x1x1"));
  CHECK(phi_inv(phi(PY("ppyyp"))) == PY("ppyyp"));
}

TEST_CASE("weight projection") {
  CHECK(weight_projection(PY("2 pypy + pyy - 2 ppy - py"), 2) == PY("2 pypy - 2 ppy"));
  CHECK(weight_projection(H2("x0x1 + x1"), 2) == H2("x0x1"));
  CHECK(weight_projection(PY("0"), 3).is_zero());
}

TEST_CASE("poly arithmetic keeps canonical order and drops zeros") {
  const Poly p = PY("py + pyy - py + 1/2 y");
  CHECK(p == PY("pyy + 1/2 y"));
  CHECK(p.to_string() == "1/2 y + pyy");
  CHECK((p - p).is_zero());
  CHECK((p * Rational(0)).is_zero());
  CHECK(concat(PY("p"), PY("y + py")) == PY("py + ppy"));
}

TEST_CASE("parser") {
  CHECK(H2("z{2}z{1}") == H2("x0x1x1"));
  CHECK(PY("(1,0)") == PY("pyy"));
  CHECK(PY("()") == PY("1"));
  CHECK(PY("2(py + y)") == PY("2 py + 2 y"));
  CHECK(PY("-3/2 py") * Rational(-2) == PY("3 py"));
  CHECK(PY("ppy sh ppy") == shuffle_lambda_py(PY("ppy"), PY("ppy"), 1));
  CHECK(PY("py sh py + y") == PY("2 pypy + pyy + y"));
  CHECK(parse_composition("(2, 1)") == Composition{2, 1});
  CHECK(parse_composition("(-1)") == Composition{-1});

  CHECK_THROWS_AS(PY("pq"), ParseError);
  CHECK_THROWS_AS(PY("py +"), ParseError);
  CHECK_THROWS_AS(PY("(py"), ParseError);
  CHECK_THROWS_AS(H2("py"), ParseError);
  CHECK_THROWS_AS(PY("x0"), ParseError);
  CHECK_THROWS_AS(PY("py star py"), ParseError);
  try {
    PY("ppy ? y");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK(parse_alphabet("h") == Alphabet::H2);
  CHECK(parse_alphabet("H") == Alphabet::PY);
  CHECK(parse_alphabet("pdy") == Alphabet::PDY);
  CHECK_THROWS_AS(parse_alphabet("q"), DomainError);
}

TEST_CASE("parse o format is the identity on canonical output") {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    for (const Alphabet a : {Alphabet::H2, Alphabet::PY, Alphabet::PDY}) {
      Poly p = random_poly(rng, a, 7);
      if (i % 3 == 0 && a != Alphabet::PDY) {
        p = a == Alphabet::H2 ? shuffle(p, random_poly(rng, a, 3)) : concat(p, p) * Rational(1, 3);
      }
      const ParseContext ctx{a, 1};
      CHECK(parse_expr(format_poly(p, WordFormat::Letters), ctx) == p);
      CHECK(parse_expr(format_poly(p, WordFormat::Auto), ctx) == p);
    }
  }
}

TEST_CASE("json roundtrips") {
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) {
    for (const Alphabet a : {Alphabet::H2, Alphabet::PY, Alphabet::PDY}) {
      const Poly p = random_poly(rng, a, 6);
      CHECK(poly_from_json(poly_to_json(p)) == p);
    }
  }
  const Json j = poly_to_json(PY("2 py - 1/3 y"));
  CHECK(j["alphabet"] == "PY");
  CHECK(j["terms"][0]["coeff"] == "-1/3");
  CHECK(j["terms"][0]["word"] == Json::array({"y"}));
  CHECK(j["terms"][1]["coeff"] == "2/1");
  CHECK_THROWS(poly_from_json(Json::parse(R"({"alphabet":"PY","terms":[{"coeff":"1/0","word":["p"]}]})")));
}
