// Runs every acceptance criterion at its stated bounds and prints one line each.
// Exit status is 0 once all criteria have been evaluated; the verdicts are in the output.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mzvlab/expr.hpp"
#include "mzvlab/hopf.hpp"
#include "mzvlab/maps.hpp"
#include "mzvlab/qseries.hpp"
#include "mzvlab/suites.hpp"

using namespace mzv;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

struct Run {
  std::string suite;
  int bound;
  int order = 30;
};

Poly H2(const std::string& s) { return parse_expr(s, {Alphabet::H2, 1}); }
Poly PY(const std::string& s) { return parse_expr(s, {Alphabet::PY, 1}); }

Outcome suites(const std::vector<Run>& runs) {
  Outcome o;
  for (const Run& r : runs) {
    SuiteOptions opts;
    opts.max_weight = r.bound;
    opts.order = r.order;
    const SuiteReport rep = run_suite(r.suite, opts);
    o.note += (o.note.empty() ? "" : "; ") + r.suite + " " + std::to_string(rep.cases - rep.failures.size()) + "/" +
              std::to_string(rep.cases);
    if (!rep.passed()) {
      o.ok = false;
      const Failure& f = rep.failures.front();
      std::string detail = f.detail.substr(0, f.detail.find('\n'));
      o.note += " (first failure " + f.input.dump() + (detail.empty() ? "" : ": " + detail) + ")";
    }
  }
  return o;
}

Outcome check(bool ok, const std::string& what) { return {ok, ok ? "" : what + " mismatch"}; }

Outcome both(Outcome a, const Outcome& b) {
  a.ok = a.ok && b.ok;
  if (!b.note.empty()) a.note += (a.note.empty() ? "" : "; ") + b.note;
  return a;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // 0: no runtime requirement
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "classical products", 1.0,
       [] {
         Outcome o = check(H2("z{2} * z{2}") == H2("2 z{2}z{2} + z{4}"), "z2 * z2");
         return both(o, check(H2("x0x1 sh x0x1") == H2("2 x0x1x0x1 + 4 x0x0x1x1"), "x0x1 sh x0x1"));
       }},
      {2, "derivation d2 = square minus stuffle, weight <= 8", 30.0,
       [] {
         const Outcome o =
             check(transferred_product(quasi_shuffle, tau_poly, tau_poly, H2("x0x1"), H2("x0x1")) ==
                       H2("2 x0x1x0x1 + x0x1x1x1"),
                   "classical square example");
         return both(o, suites({{"thm-derivation", 8}}));
       }},
      {3, "Hoffman-Ohno relations, weight <= 8", 0, [] { return suites({{"hoffman-ohno", 8}}); }},
      {4, "transferred *_lambda = sh_lambda on H0, lambda = 1, -1, length <= 8", 60.0,
       [] { return suites({{"thm-szdual", 8}, {"thm-oozdual", 8}}); }},
      {5, "q-series dualities, weight <= 5, N = 30", 120.0,
       [] {
         Outcome o = check(zeta_q(Model::SZ, {2}, 4) == QPoly(4, {0, 0, 1, 2, 4}), "SZ(2) spot value");
         o = both(o, check(zeta_q(Model::OOZ, {3}, 4) == QPoly(4, {0, 1, 4, 7, 14}), "OOZ(3) spot value"));
         return both(o, suites({{"zhao-duality", 5},
                                {"ooz-szstar-duality", 5},
                                {"bradley-duality", 5},
                                {"transfer-identities", 5},
                                {"ooz-dual-families", 5},
                                {"bradley-reformulation", 5}}));
       }},
      {6, "characters and double shuffle, z-length <= 5, N = 30", 120.0,
       [] { return suites({{"characters", 5}}); }},
      {7, "Ihara map and commuting diagram, z-length <= 6", 0, [] { return suites({{"ihara", 6}}); }},
      {8, "p, d, y shuffle, infinitesimal coproduct, right coideal", 0,
       [] { return suites({{"pdy-shuffle", 6}, {"infinitesimal", 7}, {"coideal", 7}}); }},
      {9, "explicit OOZ product, star shuffle, block-map identity", 0,
       [] {
         const Outcome o = check(block_map(weight_projection(ooz_square(PY("py"), PY("py")), 2)) ==
                                     H2("2 x1x1 - 2 x0x1"),
                                 "top(py sqooz py)");
         return both(o, suites({{"ooz-explicit-vs-recursive", 6}, {"star-shuffle-alt", 8}, {"szs-dual", 6}}));
       }},
      {10, "Hopf axioms, base and transferred, length <= 6", 0, [] { return suites({{"hopf-axioms", 6}}); }},
      {11, "Rota-Baxter and float oracles, weight <= 5, N = 15", 0, [] { return suites({{"oracles", 5, 15}}); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    clear_product_caches();
    clear_hopf_caches();
    clear_qseries_caches();
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.note += "; runtime over " + std::to_string(c.limit_seconds) + " s";
    }
    failed += o.ok ? 0 : 1;
    std::printf("criterion %2d: %s  %s  [%.2fs]  %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title.c_str(), secs,
                o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return 0;
}
