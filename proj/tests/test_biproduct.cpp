#include "doctest.h"

#include "twocat/biproduct.hpp"
#include "twocat/errors.hpp"
#include "twocat/laws.hpp"

using namespace twocat;
using namespace twocat::biproduct;
using twocat::laws::gen_one_mor;
using twocat::laws::gen_repartition;
using twocat::laws::gen_two_mor;

TEST_CASE("witness conditions small") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; m <= 4; ++m) {
      const Witness w = make_witness(n, m);
      const Report r = check_biproduct_conditions(w);
      for (const auto& c : r.checks) {
        INFO(n, " ", m, " ", c.name, " ", c.detail);
        CHECK(c.passed);
      }
      const SigmaRows s = sigma_rows(w);
      CHECK(s.sigma_a == whisker_left(w.p_a, w.theta_p));
      CHECK(s.sigma_b == whisker_left(w.p_b, w.theta_p));
      if (n + m <= 6) {
        const auto eq = canonical_equiv(n, m);
        for (const auto& c : check_equivalence(w, eq).checks) {
          INFO(n, " ", m, " ", c.name, " ", c.detail);
          CHECK(c.passed);
        }
      }
    }
}

TEST_CASE("box projections and injections") {
  CHECK(box_obj(2, 3) == 5);
  CHECK(decat(box_proj(1, 1, Side::first)).mat() == Matrix{{1, 0}});
  CHECK(decat(box_inj(2, 1, Side::second)).mat() == Matrix{{0}, {0}, {1}});
  const OneMor pi = hcompose1(box_proj(2, 3, Side::first), box_inj(2, 3, Side::second));
  for (const Decomp& d : pi.entries()) CHECK(d.total() == 0);
}

TEST_CASE("witness for n = m = 1") {
  const Witness w = make_witness(1, 1);
  const OneMor pa_ia = hcompose1(w.p_a, w.i_a);
  CHECK(pa_ia.at(0, 0).total() == 1);
  CHECK(pa_ia.at(0, 0).size() > 1);
  CHECK(w.theta_a.tgt() == id_one(1));
  CHECK(w.theta_a.at(0, 0) == Matrix::identity(1));
  CHECK(w.theta_ab == zero_two(hcompose1(w.p_a, w.i_b), zero_one(1, 1)));
  CHECK(id_two(hcompose1(w.p_a, w.i_b)).is_zero());
  CHECK(id_two(hcompose1(w.p_b, w.i_a)).is_zero());
  CHECK(check_biproduct_conditions(w).ok());
  CHECK(whisker_left(pa_ia, w.theta_a) == whisker_right(w.theta_a, pa_ia));
}

TEST_CASE("sigma rows have a vanishing second component") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      const Witness w = make_witness(n, m);
      const SigmaRows s = sigma_rows(w);
      const OneMor first = hcompose1(id_one(n), w.p_a), second = hcompose1(zero_one(m, n), w.p_b);
      REQUIRE(s.lambda_a.tgt() == oplus_one(first, second));
      CHECK(vcompose2(local_proj(first, second, Side::second), s.lambda_a).is_zero());
      CHECK(vcompose2(local_proj(first, second, Side::first), vcompose2(s.lambda_a, s.split_a)) == s.sigma_a);
    }
  const SigmaRows s = sigma_rows(make_witness(1, 1));
  CHECK(s.sigma_a.tgt() == box_proj(1, 1, Side::first));
  CHECK(s.sigma_a.at(0, 0).rows() == 1);
  CHECK(s.sigma_a.at(0, 1).rows() == 0);
}

TEST_CASE("cone with identity and zero legs") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 0; m <= 2; ++m) {
      const Witness w = make_witness(n, m);
      const Mediator med = product_mediator(w, Cone{n, id_one(n), zero_one(n, m)});
      CHECK(normalize(med.b).normal == normalize(w.i_a).normal);
      CHECK(normalize(med.xi_a) == normalize(w.theta_a));
    }
}

TEST_CASE("random cones") {
  laws::Rng rng(21);
  laws::LawConfig cfg;
  cfg.max_dim = 2;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = rng.between(0, 2), m = rng.between(0, 2), x = rng.between(0, 2);
    const Witness w = make_witness(n, m);
    const Cone c{x, gen_one_mor(rng, cfg, x, n), gen_one_mor(rng, cfg, x, m)};
    const Cone c2{x, gen_repartition(rng, cfg, c.f), gen_repartition(rng, cfg, c.g)};
    const Mediator med = product_mediator(w, c), med2 = product_mediator(w, c2);
    CHECK(decat(med.b).mat() == vstack(decat(c.f).mat(), decat(c.g).mat()));
    CHECK(invert(med.xi_a));
    CHECK(invert(med.xi_b));
    CHECK(mediator_gamma(w, c, c, id_two(c.f), id_two(c.g)) == id_two(med.b));
    const TwoMor sa = gen_two_mor(rng, cfg, c.f, c2.f), sb = gen_two_mor(rng, cfg, c.g, c2.g);
    const TwoMor gamma = mediator_gamma(w, c, c2, sa, sb);
    CHECK(gamma == mediator_gamma_explicit(w, c, c2, sa, sb));
    CHECK_FALSE(universal_condition_failure(w, med, med2, gamma, sa, Side::first));
    CHECK_FALSE(universal_condition_failure(w, med, med2, gamma, sb, Side::second));
    CHECK(reconstruct_gamma(w, gamma) == gamma);
    CHECK(reconstruct_gamma(w, id_two(med.b)) == id_two(med.b));
    CHECK(check_theta_p_expansion(w, c).ok());
  }
}

TEST_CASE("a wrong gamma violates the universal condition") {
  const Witness w = make_witness(1, 1);
  const OneMor f(1, 1, {{1}}), g(1, 1, {{1}});
  const Cone c{1, f, g};
  const Mediator med = product_mediator(w, c);
  const TwoMor sa(f, f, {Matrix{{2}}});
  const TwoMor gamma = mediator_gamma(w, c, c, sa, id_two(g));
  CHECK_FALSE(universal_condition_failure(w, med, med, gamma, sa, Side::first));
  CHECK(universal_condition_failure(w, med, med, id_two(med.b), sa, Side::first));
}

TEST_CASE("monic mediator") {
  laws::Rng rng(22);
  laws::LawConfig cfg;
  cfg.max_dim = 2;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = rng.between(0, 2), m = rng.between(0, 2), x = rng.between(0, 2);
    const Witness w = make_witness(n, m);
    const OneMor b = gen_one_mor(rng, cfg, x, n + m);
    const OneMor pab = hcompose1(w.p_a, b), pbb = hcompose1(w.p_b, b);
    CHECK(monic_mediator(w, b, b, id_two(pab), id_two(pbb)) == id_two(b));
    std::vector<Matrix> ea, eb;
    for (const Decomp& d : pab.entries()) ea.push_back(laws::gen_invertible(rng, cfg, d.total()));
    for (const Decomp& d : pbb.entries()) eb.push_back(laws::gen_invertible(rng, cfg, d.total()));
    const TwoMor sa(pab, pab, ea), sb(pbb, pbb, eb);
    const TwoMor gamma = monic_mediator(w, b, b, sa, sb);
    CHECK(whisker_left(w.p_a, gamma) == sa);
    CHECK(whisker_left(w.p_b, gamma) == sb);
    CHECK(invert(gamma));
  }
  const Witness w = make_witness(1, 1);
  const OneMor b = box_inj(1, 1, Side::first);
  const OneMor pab = hcompose1(w.p_a, b), pbb = hcompose1(w.p_b, b);
  CHECK_THROWS_AS(monic_mediator(w, b, b, zero_two(pab, pab), id_two(pbb)), NotInvertible);
}
