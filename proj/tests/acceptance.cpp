// Acceptance run: one PASS/FAIL line per criterion. Every equality is exact;
// a criterion also fails when it exceeds its time budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "twocat/biproduct.hpp"
#include "twocat/demo.hpp"
#include "twocat/laws.hpp"
#include "twocat/matcat.hpp"

using namespace twocat;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

laws::LawConfig config(std::size_t cases, laws::Mutation mutation = laws::Mutation::none) {
  laws::LawConfig cfg;
  cfg.seed = kSeed;
  cfg.cases_per_law = cases;
  cfg.max_object = 3;
  cfg.max_components = 3;
  cfg.max_dim = 3;
  cfg.mutation = mutation;
  return cfg;
}

void require_law(Outcome& o, const std::string& name, const laws::LawConfig& cfg, std::size_t min_cases) {
  const laws::LawResult r = laws::run_law(name, cfg);
  if (r.cases < min_cases)
    o.fail(name + ": ran " + std::to_string(r.cases) + " cases, need " + std::to_string(min_cases));
  else if (!r.ok())
    o.fail(name + " case " + std::to_string(r.failures.front().case_index) + ": " + r.failures.front().message);
}

Outcome matk_axioms() {
  using namespace matcat;
  Outcome o;
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t m = 0; m <= 6; ++m) {
      const MatObj a{n}, b{m};
      const MatMor pa = proj(a, b, matcat::Side::first), pb = proj(a, b, matcat::Side::second);
      const MatMor ia = inj(a, b, matcat::Side::first), ib = inj(a, b, matcat::Side::second);
      const bool ok = compose(pa, ia) == identity(a) && compose(pb, ib) == identity(b) &&
                      compose(pa, ib) == zero(b, a) && compose(pb, ia) == zero(a, b) &&
                      add_via_biproduct(compose(ia, pa), compose(ib, pb)) == identity({n + m});
      if (!ok) o.fail("axioms fail at n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  laws::LawConfig cfg = config(200);
  for (std::size_t c = 0; c < 200; ++c) {
    laws::Rng rng(laws::case_seed(kSeed, "acceptance.addition", c));
    const std::size_t r = rng.between(0, 6), k = rng.between(0, 6);
    const MatMor f(laws::gen_matrix(rng, cfg, r, k)), g(laws::gen_matrix(rng, cfg, r, k));
    Matrix want(r, k);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) want(i, j) = f.mat()(i, j) + g.mat()(i, j);
    if (add_via_biproduct(f, g).mat() != want) o.fail("addition differs on pair " + std::to_string(c));
  }
  return o;
}

Outcome dnc() {
  Outcome o;
  const laws::LawConfig cfg = config(1);
  laws::Rng rng(laws::case_seed(kSeed, "acceptance.dnc", 0));
  for (std::size_t a = 1; a <= 16; ++a)
    for (std::size_t b = 1; b <= 16; ++b)
      for (std::size_t c = 1; c <= 16; ++c) {
        const matcat::MatMor x(laws::gen_matrix(rng, cfg, a, b)), y(laws::gen_matrix(rng, cfg, b, c));
        if (matcat::dnc_mul(x, y, 2).mat() != mat_mul(x.mat(), y.mat()))
          o.fail("shape " + std::to_string(a) + "x" + std::to_string(b) + "x" + std::to_string(c));
      }
  for (const std::size_t n : {32, 64}) {
    const matcat::MatMor x(laws::gen_matrix(rng, cfg, n, n)), y(laws::gen_matrix(rng, cfg, n, n));
    if (matcat::dnc_mul(x, y, 4).mat() != mat_mul(x.mat(), y.mat())) o.fail("size " + std::to_string(n));
  }
  return o;
}

Outcome interchange() {
  Outcome o;
  require_law(o, "twovect.interchange", config(200), 200);
  return o;
}

Outcome distributivity() {
  Outcome o;
  require_law(o, "twovect.horizontal_distributivity", config(200), 200);
  require_law(o, "twovect.vertical_distributivity", config(200), 200);
  return o;
}

Outcome distributor_iso() {
  Outcome o;
  require_law(o, "twovect.distributor", config(100), 100);
  return o;
}

Outcome biproduct_conditions() {
  Outcome o;
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; m <= 4; ++m) {
      const auto w = biproduct::make_witness(n, m);
      for (const auto& c : biproduct::check_biproduct_conditions(w).checks)
        if (!c.passed) o.fail(std::to_string(n) + "," + std::to_string(m) + " " + c.name + ": " + c.detail);
      if (!w.theta_ab.is_zero() || !w.theta_ba.is_zero()) o.fail("theta_AB or theta_BA nonzero");
      if (!id_two(hcompose1(w.p_a, w.i_b)).is_zero()) o.fail("1_{p_A i_B} nonzero");
    }
  require_law(o, "biproduct.zero_lemmas", config(1), 25);
  return o;
}

Outcome universal_property() {
  Outcome o;
  require_law(o, "biproduct.universal_property", config(100), 100);
  return o;
}

Outcome equivalence() {
  Outcome o;
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      const auto w = biproduct::make_witness(n, m);
      for (const auto& c : biproduct::check_equivalence(w, biproduct::canonical_equiv(n, m)).checks)
        if (!c.passed) o.fail(std::to_string(n) + "," + std::to_string(m) + " " + c.name + ": " + c.detail);
    }
  return o;
}

Outcome demo_example() {
  Outcome o;
  const demo::DemoResult r = demo::run_demo();
  for (const auto& c : r.checks)
    if (!c.passed) o.fail(c.name);
  if (r.checks.size() < 13) o.fail("missing demo checks");
  return o;
}

Outcome mutation() {
  Outcome o;
  const laws::LawResult r = laws::run_law("twovect.interchange", config(200, laws::Mutation::kron_flip));
  if (r.ok()) o.fail("kron-flip mutant survived " + std::to_string(r.cases) + " interchange cases");
  else o.detail = std::to_string(r.failures.size()) + " counterexamples";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Mat_k biproduct axioms n,m<=6; addition via biproduct on 200 pairs", 5, matk_axioms},
      {2, "dnc_mul = mat_mul on all shapes 1..16 and sizes 32, 64", 30, dnc},
      {3, "interchange law on 200 cases", 60, interchange},
      {4, "horizontal and vertical distributivity, 200 cases each", 30, distributivity},
      {5, "distributor isomorphism and projection/injection equations, 100 cases", 30, distributor_iso},
      {6, "2-biproduct conditions, theta invertibility and zero lemmas n,m<=4", 10, biproduct_conditions},
      {7, "universal property round trip on 100 cone pairs", 60, universal_property},
      {8, "canonical equivalence zigzags n,m<=3", 10, equivalence},
      {9, "worked 3 -> 2 -> 1 example layouts and flatten oracle", 5, demo_example},
      {10, "kron-flip mutant is caught by the interchange check", 30, mutation},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s > c.budget_s) o.fail("over time budget");
    failed += !o.ok;
    std::printf("%s %2d %s [%.2fs / %.0fs, tolerance 0]%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), s,
                c.budget_s, o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
