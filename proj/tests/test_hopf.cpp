#include "helpers.hpp"
#include "mzvlab/hopf.hpp"
#include "mzvlab/json_io.hpp"
#include "mzvlab/maps.hpp"

using namespace mzv;
using namespace testing;

namespace {

// "a|b, c|d" with integer-free unit coefficients; "1" is the empty word.
Tensor2 T(Alphabet a, const std::string& text) {
  Tensor2 t(a);
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string term = text.substr(start, end - start);
    const std::size_t bar = term.find('|');
    const ParseContext ctx{a, 1};
    t.add_product(parse_expr(term.substr(0, bar), ctx), parse_expr(term.substr(bar + 1), ctx));
    start = end + 1;
  }
  return t;
}

const LinearMap id = [](const Poly& p) { return p; };

}  // namespace

TEST_CASE("deconcatenation and counit") {
  CHECK(deconcat(PY("z{2}z{1}")) == T(Alphabet::PY, "z{2}z{1}|1, 1|z{2}z{1}, z{2}|z{1}"));
  CHECK(deconcat(PY("1")) == T(Alphabet::PY, "1|1"));
  CHECK(deconcat(PY("z{3}")) == T(Alphabet::PY, "z{3}|1, 1|z{3}"));
  CHECK(counit(PY("3 + py")) == 3);
  CHECK_THROWS_AS(deconcat(PY("yp")), NotInSubalgebra);
}

TEST_CASE("antipode") {
  CHECK(antipode(PY("1"), 1) == PY("1"));
  CHECK(antipode(PY("z{2}"), 1) == PY("-z{2}"));
  CHECK(antipode(PY("z{2}z{1}"), 1) == PY("z{1}z{2} + z{3}"));
  CHECK(antipode(PY("z{2}z{1}"), -1) == PY("z{1}z{2} - z{3}"));
  CHECK(antipode_classical(H2("z{2}z{1}")) == H2("z{1}z{2} + z{3}"));
  const BilinearMap m = [](const Poly& u, const Poly& v) { return quasi_shuffle_lambda(u, v, 1); };
  const LinearMap s = [](const Poly& p) { return antipode(p, 1); };
  CHECK(contract(map_tensor(deconcat(PY("z{2}z{1}")), s, id, Alphabet::PY), m).is_zero());
}

TEST_CASE("Hopf axioms") {
  std::vector<Poly> samples;
  for (const Word& w : words_up_to(Alphabet::PY, 5)) {
    if (is_z_decodable(w)) samples.emplace_back(w);
  }
  std::vector<std::pair<Poly, Poly>> pairs;
  for (std::size_t i = 0; i < samples.size() && i < 12; ++i) pairs.emplace_back(samples[i], samples[samples.size() - 1 - i]);
  for (const int l : {1, -1, 2}) {
    CHECK(check_hopf_axioms(quasi_shuffle_hopf(l), samples, pairs).empty());
  }
  std::vector<Poly> starts_p;
  for (const Word& w : words_up_to(Alphabet::PY, 5)) {
    if (w.empty() || w[0] == kP) starts_p.emplace_back(w);
  }
  const HopfStructure t = transfer_hopf(quasi_shuffle_hopf(1), tau_tilde_poly, tau_tilde_poly, "t");
  CHECK(check_hopf_axioms(t, starts_p, {{PY("py"), PY("ppy")}, {PY("pyy"), PY("py")}}).empty());
  CHECK(t.coproduct(PY("py")) == T(Alphabet::PY, "py|1, 1|py"));

  const HopfStructure c = transfer_hopf(classical_quasi_shuffle_hopf(), tau_poly, tau_poly, "c");
  CHECK(c.product(H2("x0x1"), H2("x0x1")) == H2("2 x0x1x0x1 + x0x1x1x1"));
  CHECK(check_hopf_axioms(c, {H2("x0x1"), H2("x0x0x1"), H2("x0x1x1x1")}, {{H2("x0x1"), H2("x0x0x1")}}).empty());
}

TEST_CASE("identity transfer equals base") {
  const HopfStructure base = quasi_shuffle_hopf(1);
  const HopfStructure t = transfer_hopf(base, id, id, "id");
  for (const Word& w : words_up_to(Alphabet::PY, 4)) {
    if (!is_z_decodable(w)) continue;
    CHECK(t.coproduct(Poly(w)) == base.coproduct(Poly(w)));
    CHECK(t.antipode(Poly(w)) == base.antipode(Poly(w)));
    CHECK(t.product(Poly(w), PY("py")) == base.product(Poly(w), PY("py")));
  }
}

TEST_CASE("axiom checker reports a broken structure") {
  HopfStructure h = quasi_shuffle_hopf(1);
  h.antipode = [](const Poly& p) { return p; };
  const auto failures = check_hopf_axioms(h, {PY("z{2}")});
  REQUIRE_FALSE(failures.empty());
  CHECK(failures.front().axiom.find("antipode") != std::string::npos);
}

TEST_CASE("transferred coproduct, opposite") {
  CHECK(coproduct_square_op(PY("py")) == T(Alphabet::PY, "py|1, 1|py"));
  CHECK(coproduct_square_op(PY("ppy")) == T(Alphabet::PY, "ppy|1, 1|ppy, p|py"));
  CHECK(coproduct_square_op(PY("1")) == T(Alphabet::PY, "1|1"));
  CHECK_THROWS_AS(coproduct_square_op(PY("y")), NotInSubalgebra);
}

TEST_CASE("infinitesimal coproduct") {
  CHECK(infinitesimal_coproduct(PDY("y")) == T(Alphabet::PDY, "y|1"));
  CHECK(infinitesimal_coproduct(PDY("py")) == T(Alphabet::PDY, "1|py, py|1"));
  CHECK(infinitesimal_coproduct(PDY("pd")) == T(Alphabet::PDY, "1|1"));
  CHECK(infinitesimal_coproduct(PDY("ppy")) == T(Alphabet::PDY, "ppy|1, 1|ppy, p|py"));

  const Coproduct d = infinitesimal_coproduct;
  std::mt19937 rng(8);
  for (int i = 0; i < 80; ++i) {
    const Word u = random_word(rng, Alphabet::PDY, 5);
    const Word v = random_word(rng, Alphabet::PDY, 4);
    const Tensor2 du = d(Poly(u));
    CHECK(coproduct_left(du, d) == coproduct_right(du, d));
    for (std::size_t k = 1; k < u.size(); ++k) CHECK(infinitesimal_coproduct_split(u.letters(), k) == du);
    CHECK(infinitesimal_coproduct_raw(u.letters() + std::string{kP, kD}) == du);
    // unital infinitesimal rule on concatenation
    Tensor2 rule(Alphabet::PDY);
    const Tensor2 dv = d(Poly(v));
    for (const auto& [k, c] : dv.terms()) rule.add_term(u * Word(Alphabet::PDY, k.first), Word(Alphabet::PDY, k.second), c);
    for (const auto& [k, c] : du.terms()) rule.add_term(Word(Alphabet::PDY, k.first), Word(Alphabet::PDY, k.second) * v, c);
    rule.add_term(u, v, -1);
    CHECK(d(Poly(u * v)) == rule);
    for (const int l : {1, -1, 2}) {
      const BilinearMap m = [l](const Poly& a, const Poly& b) { return shuffle_lambda_pdy(a, b, l); };
      CHECK(d(m(Poly(u), Poly(v))) == tensor_multiply(du, dv, m));
    }
  }
}

TEST_CASE("coideal checks") {
  auto in_H0 = [](const Word& w) { return membership(w, Subspace::H0); };
  auto in_h0 = [](const Word& w) { return membership(w, Subspace::h0); };
  const std::vector<Word> H0 = convergent_py(4, 4, true);
  // deconcatenation keeps the left factor in H0: a right coideal, not a left one
  CHECK(coideal_check(in_H0, deconcat, CoidealSide::Right, H0).ok);
  const CoidealResult left = coideal_check(in_H0, deconcat, CoidealSide::Left, H0);
  REQUIRE_FALSE(left.ok);
  CHECK(left.witness->right == "y");
  // the opposite transferred coproduct keeps the right factor in H0
  CHECK(coideal_check(in_H0, coproduct_square_op, CoidealSide::Left, H0).ok);
  const CoidealResult right = coideal_check(in_H0, coproduct_square_op, CoidealSide::Right, H0);
  REQUIRE_FALSE(right.ok);
  CHECK(right.witness->sample == "ppy");
  CHECK(right.witness->left == "p");
  CHECK(right.witness->right == "py");
  // h0 under deconcatenation
  CHECK(coideal_check(in_h0, deconcat, CoidealSide::Right, convergent_h2(5)).ok);
  const CoidealResult h = coideal_check(in_h0, deconcat, CoidealSide::Left, convergent_h2(4));
  REQUIRE_FALSE(h.ok);
  CHECK(h.witness->sample == "x0x1x1");
  CHECK(h.witness->right == "x1");
}

TEST_CASE("tensor json roundtrip") {
  const Tensor2 t = coproduct_square_op(PY("ppyy"));
  CHECK(tensor_from_json(tensor_to_json(t), Alphabet::PY) == t);
}
