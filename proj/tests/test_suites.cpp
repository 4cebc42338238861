#include <sstream>

#include "helpers.hpp"
#include "mzvlab/hopf.hpp"
#include "mzvlab/maps.hpp"

using namespace mzv;
using namespace testing;

TEST_CASE("enumerators") {
  CHECK(words_of_length(Alphabet::H2, 3).size() == 8);
  CHECK(words_of_length(Alphabet::PDY, 2).size() == 7);  // 9 minus pd, dp
  CHECK(convergent_h2(4).size() == 1 + 2 + 4);
  CHECK(convergent_h2(4, true).front().empty());
  for (const Word& w : convergent_py(3, 2)) {
    CHECK(membership(w, Subspace::H0));
    CHECK(grading(w).weight <= 3);
    CHECK(grading(w).depth <= 2);
  }
  const auto cs = compositions(2, 1, 0, 2, 3);
  CHECK(cs.front() == Composition{1});
  CHECK(std::find(cs.begin(), cs.end(), Composition{2, 1}) != cs.end());
  CHECK(std::find(cs.begin(), cs.end(), Composition{2, 2}) == cs.end());
  // canonical order inside a length
  const auto w3 = words_of_length(Alphabet::PY, 3);
  CHECK(std::is_sorted(w3.begin(), w3.end()));
}

TEST_CASE("suite registry") {
  const auto names = suite_names();
  CHECK(names.back() == "all");
  CHECK(std::find(names.begin(), names.end(), "thm-derivation") != names.end());
  CHECK_THROWS_AS(build_suite("no-such-suite", {}), DomainError);
  CHECK_THROWS_AS(suite_description("no-such-suite"), DomainError);
}

TEST_CASE("reports do not depend on the worker count") {
  SuiteOptions o;
  o.max_weight = 4;
  o.order = 12;
  for (const std::string name : {"product-laws", "coideal", "characters"}) {
    o.threads = 1;
    const Json one = report_to_json(run_suite(name, o));
    o.threads = 4;
    Json four = report_to_json(run_suite(name, o));
    Json a = one;
    a.erase("seconds");
    four.erase("seconds");
    CHECK(a == four);
  }
}

TEST_CASE("a failing case is reported with its input") {
  std::vector<Case> cases;
  cases.push_back({Json{{"n", 1}}, [] { return CaseResult{true, Json(), ""}; }});
  cases.push_back({Json{{"n", 2}}, [] { return CaseResult{false, Json(), "boom"}; }});
  cases.push_back({Json{{"n", 3}}, []() -> CaseResult { throw DomainError("thrown"); }});
  const SuiteReport r = run_cases("synthetic", cases, {});
  CHECK_FALSE(r.passed());
  REQUIRE(r.failures.size() == 2);
  CHECK(r.failures[0].index == 1);
  CHECK(r.failures[0].detail == "boom");
  CHECK(r.failures[1].detail.find("thrown") != std::string::npos);
  const Json j = report_to_json(r);
  CHECK(j["failed"] == 2);
  CHECK(j["passed"] == false);
}

TEST_CASE("exported vectors re-read against the library") {
  SuiteOptions o;
  o.max_weight = 5;
  std::stringstream ss;
  const std::size_t n = export_vectors("thm-szdual", o, ss);
  std::string line;
  std::getline(ss, line);
  const Json header = Json::parse(line);
  CHECK(header["suite"] == "thm-szdual");
  CHECK(header["cases"] == n);
  std::size_t records = 0, checked = 0;
  while (std::getline(ss, line)) {
    const Json rec = Json::parse(line);
    ++records;
    CHECK(rec["ok"] == true);
    if (records % 2 != 1) continue;
    const Poly u = PY(rec["input"]["u"].get<std::string>());
    const Poly v = PY(rec["input"]["v"].get<std::string>());
    const Rational l(rec["input"]["lambda"].get<int>());
    CHECK(poly_from_json(rec["expected"]) == shuffle_lambda_py(u, v, l));
    ++checked;
  }
  CHECK(records == n);
  CHECK(checked >= 3);

  std::stringstream empty;
  o.max_weight = 0;
  CHECK(export_vectors("thm-szdual", o, empty) == 0);
  std::string only;
  std::getline(empty, only);
  CHECK(Json::parse(only)["cases"] == 0);
  CHECK_FALSE(std::getline(empty, only));
}
