#include "mzvlab/json_io.hpp"

namespace mzv {

namespace {

Alphabet alphabet_from_name(const std::string& s) {
  if (s == "H2") return Alphabet::H2;
  if (s == "PY") return Alphabet::PY;
  if (s == "PDY") return Alphabet::PDY;
  throw DomainError("unknown alphabet '" + s + "' in JSON");
}

Letter letter_from_name(Alphabet a, const std::string& s) {
  if (a == Alphabet::H2) {
    if (s == "x0") return kX0;
    if (s == "x1") return kX1;
  } else {
    if (s == "p") return kP;
    if (s == "y") return kY;
    if (s == "d" && a == Alphabet::PDY) return kD;
  }
  throw InvalidLetter("letter '" + s + "' is not in alphabet " + std::string(alphabet_name(a)));
}

}  // namespace

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (const Letter l : w.letters()) out.push_back(std::string(letter_name(w.alphabet(), l)));
  return out;
}

Word word_from_json(const Json& j, Alphabet a) {
  std::string letters;
  for (const auto& x : j) letters.push_back(letter_from_name(a, x.get<std::string>()));
  return Word(a, letters);
}

Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  for (const Word& w : p.words()) {
    terms.push_back({{"coeff", to_fraction_string(p.coeff(w))}, {"word", word_to_json(w)}});
  }
  return {{"alphabet", std::string(alphabet_name(p.alphabet()))}, {"terms", terms}};
}

Poly poly_from_json(const Json& j) {
  const Alphabet a = alphabet_from_name(j.at("alphabet").get<std::string>());
  Poly out(a);
  for (const auto& t : j.at("terms")) {
    out.add_term(word_from_json(t.at("word"), a), parse_rational(t.at("coeff").get<std::string>()));
  }
  return out;
}

Json tensor_to_json(const Tensor2& t) {
  Json terms = Json::array();
  for (const auto& [k, c] : t.terms()) {
    terms.push_back({{"coeff", to_fraction_string(c)},
                     {"left", word_to_json(Word(t.alphabet(), k.first))},
                     {"right", word_to_json(Word(t.alphabet(), k.second))}});
  }
  return {{"terms", terms}};
}

Tensor2 tensor_from_json(const Json& j, Alphabet a) {
  Tensor2 out(a);
  for (const auto& t : j.at("terms")) {
    out.add_term(word_from_json(t.at("left"), a), word_from_json(t.at("right"), a),
                 parse_rational(t.at("coeff").get<std::string>()));
  }
  return out;
}

Json qpoly_to_json(const QPoly& q) {
  Json coeffs = Json::array();
  for (const Rational& c : q.coeffs()) coeffs.push_back(to_fraction_string(c));
  return {{"order", q.order()}, {"coeffs", coeffs}};
}

QPoly qpoly_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return QPoly(j.at("order").get<int>(), std::move(coeffs));
}

Json composition_to_json(const Composition& c) { return Json(c.parts); }

Json float_estimate_to_json(const FloatEstimate& e) {
  return {{"value", static_cast<double>(e.value)}, {"error_bound", static_cast<double>(e.error_bound)}};
}

}  // namespace mzv
