#include "twocat/biproduct.hpp"

#include <algorithm>
#include <stdexcept>

#include "twocat/errors.hpp"

namespace twocat::biproduct {

std::size_t box_obj(std::size_t n, std::size_t m) { return n + m; }

OneMor box_proj(std::size_t n, std::size_t m, Side side) {
  const std::size_t sum = n + m;
  const std::size_t rows = side == Side::first ? n : m;
  const std::size_t shift = side == Side::first ? 0 : n;
  std::vector<Decomp> e(rows * sum, Decomp{0});
  for (std::size_t k = 0; k < rows; ++k) e[k * sum + k + shift] = Decomp{1};
  return OneMor(sum, rows, std::move(e));
}

OneMor box_inj(std::size_t n, std::size_t m, Side side) {
  const OneMor p = box_proj(n, m, side);
  std::vector<Decomp> e;
  e.reserve(p.entries().size());
  for (std::size_t j = 0; j < p.src(); ++j)
    for (std::size_t k = 0; k < p.tgt(); ++k) e.push_back(p.at(k, j));
  return OneMor(p.tgt(), p.src(), std::move(e));
}

OneMor Witness::l() const { return oplus_one(hcompose1(i_a, p_a), hcompose1(i_b, p_b)); }

namespace {

/// Normalizer of `f`, after checking that the normal form is `expected`.
TwoMor normalizer_onto(const OneMor& f, const OneMor& expected, const char* what) {
  Normalization nf = normalize(f);
  if (nf.normal != expected)
    throw std::logic_error(std::string(what) + ": normal form is " + to_string(nf.normal) +
                           ", expected " + to_string(expected));
  return std::move(nf.forward);
}

CheckResult expect_equal(std::string name, const TwoMor& a, const TwoMor& b) {
  const auto diff = first_difference(a, b);
  return {std::move(name), !diff.has_value(), diff.value_or("")};
}

CheckResult expect_iso(std::string name, const TwoMor& t) {
  const auto inv = invert(t);
  if (!inv) return {std::move(name), false, "not invertible"};
  if (auto d = first_difference(vcompose2(*inv, t), id_two(t.src())))
    return {std::move(name), false, "left inverse: " + *d};
  if (auto d = first_difference(vcompose2(t, *inv), id_two(t.tgt())))
    return {std::move(name), false, "right inverse: " + *d};
  return {std::move(name), true, ""};
}

CheckResult expect_zero(std::string name, const TwoMor& t) {
  return expect_equal(std::move(name), t, zero_two(t.src(), t.tgt()));
}

/// The 2x2 matrix form of p theta_P i for the projection/injection pair of
/// one side: the 2-morphism
///   (p i_A)(p_A i) (+) (p i_B)(p_B i) => p i
/// obtained by transporting p theta_P i along distributors and associators.
TwoMor matrix_form(const Witness& w, const OneMor& p, const OneMor& i) {
  const OneMor a = hcompose1(w.i_a, w.p_a);
  const OneMor b = hcompose1(w.i_b, w.p_b);
  const TwoMor lhs = whisker_left(p, whisker_right(w.theta_p, i));

  const OneMor ai = hcompose1(a, i), bi = hcompose1(b, i);
  const TwoMor rho = distributor_right(a, b, i).alpha;  // a i (+) b i => l i
  const TwoMor alpha = distributor(p, ai, bi).alpha;    // p(a i) (+) p(b i) => p(a i (+) b i)
  const TwoMor split = vcompose2(whisker_left(p, rho), alpha);

  auto regroup = [&](const OneMor& inj, const OneMor& proj) {
    // (p inj)(proj i) => p(inj (proj i)) => p((inj proj) i)
    return vcompose2(whisker_left(p, associator_inv(inj, proj, i)),
                     associator(p, inj, hcompose1(proj, i)));
  };
  const TwoMor regrouped = oplus_two(regroup(w.i_a, w.p_a), regroup(w.i_b, w.p_b));
  return vcompose2(lhs, vcompose2(split, regrouped));
}

}  // namespace

Witness make_witness(std::size_t n, std::size_t m) {
  Witness w;
  w.n = n;
  w.m = m;
  w.p_a = box_proj(n, m, Side::first);
  w.p_b = box_proj(n, m, Side::second);
  w.i_a = box_inj(n, m, Side::first);
  w.i_b = box_inj(n, m, Side::second);
  w.theta_a = normalizer_onto(hcompose1(w.p_a, w.i_a), id_one(n), "theta_A");
  w.theta_b = normalizer_onto(hcompose1(w.p_b, w.i_b), id_one(m), "theta_B");
  // Maps into a zero 1-morphism are unique, hence zero.
  w.theta_ab = zero_two(hcompose1(w.p_a, w.i_b), zero_one(m, n));
  w.theta_ba = zero_two(hcompose1(w.p_b, w.i_a), zero_one(n, m));
  w.theta_p = normalizer_onto(w.l(), id_one(n + m), "theta_P");
  return w;
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Report check_biproduct_conditions(const Witness& w) {
  Report r;
  r.checks.push_back(expect_iso("theta_A invertible", w.theta_a));
  r.checks.push_back(expect_iso("theta_B invertible", w.theta_b));
  r.checks.push_back(expect_iso("theta_AB invertible", w.theta_ab));
  r.checks.push_back(expect_iso("theta_BA invertible", w.theta_ba));
  r.checks.push_back(expect_iso("theta_P invertible", w.theta_p));

  const OneMor pa_ia = hcompose1(w.p_a, w.i_a), pb_ib = hcompose1(w.p_b, w.i_b);
  const OneMor pa_ib = hcompose1(w.p_a, w.i_b), pb_ia = hcompose1(w.p_b, w.i_a);

  {
    const TwoMor mf = matrix_form(w, w.p_a, w.i_a);
    const OneMor s1 = hcompose1(pa_ia, pa_ia), s2 = hcompose1(pa_ib, pb_ia);
    r.checks.push_back(expect_equal("p_A theta_P i_A block (1,1) = (p_A i_A) theta_A",
                                    vcompose2(mf, local_inj(s1, s2, Side::first)),
                                    whisker_left(pa_ia, w.theta_a)));
    r.checks.push_back(
        expect_zero("p_A theta_P i_A block (1,2) = 0", vcompose2(mf, local_inj(s1, s2, Side::second))));
  }
  {
    const TwoMor mf = matrix_form(w, w.p_b, w.i_b);
    const OneMor s1 = hcompose1(pb_ia, pa_ib), s2 = hcompose1(pb_ib, pb_ib);
    r.checks.push_back(
        expect_zero("p_B theta_P i_B block (2,1) = 0", vcompose2(mf, local_inj(s1, s2, Side::first))));
    r.checks.push_back(expect_equal("p_B theta_P i_B block (2,2) = (p_B i_B) theta_B",
                                    vcompose2(mf, local_inj(s1, s2, Side::second)),
                                    whisker_left(pb_ib, w.theta_b)));
  }

  r.checks.push_back(expect_equal("(p_A i_A) theta_A = theta_A (p_A i_A)",
                                  whisker_left(pa_ia, w.theta_a), whisker_right(w.theta_a, pa_ia)));
  r.checks.push_back(expect_equal("(p_B i_B) theta_B = theta_B (p_B i_B)",
                                  whisker_left(pb_ib, w.theta_b), whisker_right(w.theta_b, pb_ib)));

  r.checks.push_back(expect_zero("theta_AB = 0", w.theta_ab));
  r.checks.push_back(expect_zero("theta_BA = 0", w.theta_ba));
  r.checks.push_back(expect_zero("1_{p_A i_B} = 0", id_two(pa_ib)));
  r.checks.push_back(expect_zero("1_{p_B i_A} = 0", id_two(pb_ia)));
  return r;
}

namespace {

void check_cone(const Witness& w, const Cone& c) {
  if (c.f.src() != c.apex || c.g.src() != c.apex || c.f.tgt() != w.n || c.g.tgt() != w.m)
    throw ShapeError("cone (" + std::to_string(c.apex) + ", " + std::to_string(c.f.src()) + "->" +
                     std::to_string(c.f.tgt()) + ", " + std::to_string(c.g.src()) + "->" +
                     std::to_string(c.g.tgt()) + ") does not fit the biproduct of " +
                     std::to_string(w.n) + " and " + std::to_string(w.m));
}

/// xi : p (i_A f (+) i_B g) => leg, through the summand selected by side.
TwoMor leg_iso(const Witness& w, const OneMor& iaf, const OneMor& ibg, const OneMor& leg, Side side) {
  const bool first = side == Side::first;
  const OneMor& p = first ? w.p_a : w.p_b;
  const OneMor& i = first ? w.i_a : w.i_b;
  const TwoMor& theta = first ? w.theta_a : w.theta_b;
  const TwoMor split = distributor(p, iaf, ibg).alpha_inv;
  const TwoMor pick = local_proj(hcompose1(p, iaf), hcompose1(p, ibg), side);
  return vcompose2(whisker_right(theta, leg),
                   vcompose2(associator_inv(p, i, leg), vcompose2(pick, split)));
}

}  // namespace

Mediator product_mediator(const Witness& w, const Cone& c) {
  check_cone(w, c);
  const OneMor iaf = hcompose1(w.i_a, c.f);
  const OneMor ibg = hcompose1(w.i_b, c.g);
  Mediator med;
  med.b = oplus_one(iaf, ibg);
  med.xi_a = leg_iso(w, iaf, ibg, c.f, Side::first);
  med.xi_b = leg_iso(w, iaf, ibg, c.g, Side::second);
  if (!invert(med.xi_a) || !invert(med.xi_b))
    throw std::logic_error("product_mediator: weakening 2-morphism is not invertible");
  return med;
}

namespace {

void check_sigmas(const Cone& c, const Cone& c_prime, const TwoMor& sigma_a, const TwoMor& sigma_b) {
  if (sigma_a.src() != c.f || sigma_a.tgt() != c_prime.f)
    throw ShapeError("sigma_A is not a 2-morphism f => f'");
  if (sigma_b.src() != c.g || sigma_b.tgt() != c_prime.g)
    throw ShapeError("sigma_B is not a 2-morphism g => g'");
}

}  // namespace

TwoMor mediator_gamma(const Witness& w, const Cone& c, const Cone& c_prime, const TwoMor& sigma_a,
                      const TwoMor& sigma_b) {
  check_cone(w, c);
  check_cone(w, c_prime);
  check_sigmas(c, c_prime, sigma_a, sigma_b);
  return oplus_two(whisker_left(w.i_a, sigma_a), whisker_left(w.i_b, sigma_b));
}

TwoMor mediator_gamma_explicit(const Witness& w, const Cone& c, const Cone& c_prime,
                               const TwoMor& sigma_a, const TwoMor& sigma_b) {
  check_cone(w, c);
  check_cone(w, c_prime);
  check_sigmas(c, c_prime, sigma_a, sigma_b);
  const OneMor iaf = hcompose1(w.i_a, c.f), ibg = hcompose1(w.i_b, c.g);
  const OneMor iaf2 = hcompose1(w.i_a, c_prime.f), ibg2 = hcompose1(w.i_b, c_prime.g);
  const TwoMor first = vcompose2(local_inj(iaf2, ibg2, Side::first),
                                 vcompose2(whisker_left(w.i_a, sigma_a), local_proj(iaf, ibg, Side::first)));
  const TwoMor second =
      vcompose2(local_inj(iaf2, ibg2, Side::second),
                vcompose2(whisker_left(w.i_b, sigma_b), local_proj(iaf, ibg, Side::second)));
  return add_two(first, second);
}

std::optional<std::string> universal_condition_failure(const Witness& w, const Mediator& med,
                                                       const Mediator& med_prime,
                                                       const TwoMor& gamma, const TwoMor& sigma,
                                                       Side side) {
  const bool first = side == Side::first;
  const OneMor& p = first ? w.p_a : w.p_b;
  const TwoMor& xi = first ? med.xi_a : med.xi_b;
  const TwoMor& xi_prime = first ? med_prime.xi_a : med_prime.xi_b;
  const TwoMor rhs = vcompose2(inverse_of(xi_prime), vcompose2(sigma, xi));
  return first_difference(whisker_left(p, gamma), rhs);
}

TwoMor reconstruct_gamma(const Witness& w, const TwoMor& gamma_prime) {
  const OneMor& h = gamma_prime.src();
  const OneMor& h_prime = gamma_prime.tgt();
  if (h.tgt() != w.n + w.m) throw ShapeError("reconstruct_gamma: 2-morphism does not land in n + m");
  const TwoMor theta_p_inv = inverse_of(w.theta_p);
  return vcompose2(whisker_right(w.theta_p, h_prime),
                   vcompose2(whisker_left(w.l(), gamma_prime), whisker_right(theta_p_inv, h)));
}

Report check_theta_p_expansion(const Witness& w, const Cone& c) {
  check_cone(w, c);
  const OneMor iaf = hcompose1(w.i_a, c.f), ibg = hcompose1(w.i_b, c.g);
  const OneMor h = oplus_one(iaf, ibg);
  const OneMor a = hcompose1(w.i_a, w.p_a), b = hcompose1(w.i_b, w.p_b);
  const OneMor ah = hcompose1(a, h), bh = hcompose1(b, h);
  const TwoMor theta_p_h = whisker_right(w.theta_p, h);
  const TwoMor rho = distributor_right(a, b, h).alpha;  // a h (+) b h => l h

  Report r;
  auto side_check = [&](Side side) {
    const bool first = side == Side::first;
    const OneMor& inj = first ? w.i_a : w.i_b;
    const OneMor& proj = first ? w.p_a : w.p_b;
    const TwoMor& theta = first ? w.theta_a : w.theta_b;
    const OneMor& leg = first ? c.f : c.g;
    const OneMor& own = first ? iaf : ibg;
    const OneMor& ip = first ? a : b;

    const TwoMor actual = vcompose2(theta_p_h, vcompose2(rho, local_inj(ah, bh, side)));

    // (i p)(i_A f (+) i_B g) => (i p)(i_A f) (+) (i p)(i_B g) => (i p)(own)
    const TwoMor split = distributor(ip, iaf, ibg).alpha_inv;
    const TwoMor pick = local_proj(hcompose1(ip, iaf), hcompose1(ip, ibg), side);
    // (i p)(i leg) => i (p (i leg)) => i ((p i) leg)
    const TwoMor regroup = vcompose2(whisker_left(inj, associator_inv(proj, inj, leg)),
                                     associator(inj, proj, own));
    const TwoMor core = whisker_left(inj, whisker_right(theta, leg));
    const TwoMor expected =
        vcompose2(local_inj(iaf, ibg, side), vcompose2(core, vcompose2(regroup, vcompose2(pick, split))));
    r.checks.push_back(expect_equal(first ? "theta_P h . nu_1 = nu_1 . i_A theta_A f . pi_1"
                                          : "theta_P h . nu_2 = nu_2 . i_B theta_B g . pi_2",
                                    actual, expected));
  };
  side_check(Side::first);
  side_check(Side::second);
  return r;
}

SigmaRows sigma_rows(const Witness& w) {
  const OneMor a = hcompose1(w.i_a, w.p_a), b = hcompose1(w.i_b, w.p_b);
  const std::size_t sum = w.n + w.m;

  auto build = [&](const OneMor& p, Side side, const TwoMor& theta_first, const TwoMor& theta_second,
                   TwoMor& lambda, TwoMor& split) {
    // p l => p a (+) p b => (p i_A) p_A (+) (p i_B) p_B
    const TwoMor dist = distributor(p, a, b).alpha_inv;
    const TwoMor regroup =
        oplus_two(associator_inv(p, w.i_a, w.p_a), associator_inv(p, w.i_b, w.p_b));
    split = vcompose2(regroup, dist);
    lambda = oplus_two(whisker_right(theta_first, w.p_a), whisker_right(theta_second, w.p_b));
    // lambda lands in p (+) 0 or 0 (+) p.
    const OneMor zero = zero_one(sum, p.tgt());
    const TwoMor pick = side == Side::first ? local_proj(p, zero, Side::first)
                                            : local_proj(zero, p, Side::second);
    return vcompose2(pick, vcompose2(lambda, split));
  };

  SigmaRows s;
  s.sigma_a = build(w.p_a, Side::first, w.theta_a, w.theta_ab, s.lambda_a, s.split_a);
  s.sigma_b = build(w.p_b, Side::second, w.theta_ba, w.theta_b, s.lambda_b, s.split_b);
  return s;
}

EquivalenceWitness canonical_equiv(std::size_t n, std::size_t m) {
  const std::size_t sum = n + m;
  std::vector<Decomp> e(sum * sum, Decomp{0});
  for (std::size_t s = 0; s < sum; ++s) e[s * sum + s] = Decomp{1};

  EquivalenceWitness eq;
  eq.r = OneMor(sum, sum, std::move(e));
  const Witness w = make_witness(n, m);
  eq.r_prime = w.l();
  eq.xi_prod = normalizer_onto(hcompose1(eq.r, eq.r_prime), id_one(sum), "xi_{AxB}");
  {
    Normalization nf = normalize(hcompose1(eq.r_prime, eq.r));
    if (nf.normal != id_one(sum)) throw std::logic_error("xi_{A+B}: r' r does not normalize to id");
    eq.xi_coprod = std::move(nf.backward);
  }
  const OneMor ps[2] = {w.p_a, w.p_b};
  const OneMor is[2] = {w.i_a, w.i_b};
  const std::size_t dims[2] = {n, m};
  for (int k = 0; k < 2; ++k)
    for (int j = 0; j < 2; ++j) {
      const OneMor composite = hcompose1(ps[k], hcompose1(eq.r, is[j]));
      const OneMor target = k == j ? id_one(dims[k]) : zero_one(dims[j], dims[k]);
      eq.xi_kj[k][j] = normalizer_onto(composite, target, "xi_{k,j}");
    }
  return eq;
}

Report check_equivalence(const Witness& w, const EquivalenceWitness& eq) {
  Report rep;
  const OneMor& r = eq.r;
  const OneMor& rp = eq.r_prime;

  rep.checks.push_back(expect_iso("xi_{AxB} invertible", eq.xi_prod));
  rep.checks.push_back(expect_iso("xi_{A+B} invertible", eq.xi_coprod));

  // r' => (r' r) r' => r' (r r') => r'
  const TwoMor zig = vcompose2(whisker_left(rp, eq.xi_prod),
                               vcompose2(associator(rp, r, rp), whisker_right(eq.xi_coprod, rp)));
  rep.checks.push_back(expect_equal("(r' xi_{AxB}) . (xi_{A+B} r') = 1_{r'}", zig, id_two(rp)));
  // r => r (r' r) => (r r') r => r
  const TwoMor zag = vcompose2(whisker_right(eq.xi_prod, r),
                               vcompose2(associator_inv(r, rp, r), whisker_left(r, eq.xi_coprod)));
  rep.checks.push_back(expect_equal("(xi_{AxB} r) . (r xi_{A+B}) = 1_r", zag, id_two(r)));

  const OneMor a = hcompose1(w.i_a, w.p_a), b = hcompose1(w.i_b, w.p_b);
  const OneMor ps[2] = {w.p_a, w.p_b};
  const std::size_t sum = w.n + w.m;
  for (int k = 0; k < 2; ++k) {
    const OneMor& p = ps[k];
    // p (r (a (+) b)) => p (r a (+) r b) => p (r a) (+) p (r b)
    const TwoMor step1 = whisker_left(p, distributor(r, a, b).alpha_inv);
    const TwoMor step2 = distributor(p, hcompose1(r, a), hcompose1(r, b)).alpha_inv;
    // p (r (i q)) => p ((r i) q) => (p (r i)) q
    auto regroup = [&](const OneMor& i, const OneMor& q) {
      return vcompose2(associator_inv(p, hcompose1(r, i), q), whisker_left(p, associator_inv(r, i, q)));
    };
    const TwoMor step3 = oplus_two(regroup(w.i_a, w.p_a), regroup(w.i_b, w.p_b));
    const TwoMor lambda =
        oplus_two(whisker_right(eq.xi_kj[k][0], w.p_a), whisker_right(eq.xi_kj[k][1], w.p_b));
    const OneMor zero = zero_one(sum, p.tgt());
    const TwoMor pick = k == 0 ? local_proj(p, zero, Side::first) : local_proj(zero, p, Side::second);
    const TwoMor composed = vcompose2(pick, vcompose2(lambda, vcompose2(step3, vcompose2(step2, step1))));
    rep.checks.push_back(expect_equal(k == 0 ? "p_A xi_{AxB} = pi_1 . lambda" : "p_B xi_{AxB} = pi_2 . lambda'",
                                      whisker_left(p, eq.xi_prod), composed));
  }
  return rep;
}

TwoMor monic_mediator(const Witness& w, const OneMor& b, const OneMor& b_prime,
                      const TwoMor& sigma_a, const TwoMor& sigma_b) {
  if (b.src() != b_prime.src() || b.tgt() != w.n + w.m || b_prime.tgt() != w.n + w.m)
    throw ShapeError("monic_mediator: b and b' must be parallel 1-morphisms into n + m");
  if (sigma_a.src() != hcompose1(w.p_a, b) || sigma_a.tgt() != hcompose1(w.p_a, b_prime))
    throw ShapeError("monic_mediator: sigma_A is not p_A b => p_A b'");
  if (sigma_b.src() != hcompose1(w.p_b, b) || sigma_b.tgt() != hcompose1(w.p_b, b_prime))
    throw ShapeError("monic_mediator: sigma_B is not p_B b => p_B b'");
  if (!invert(sigma_a)) throw NotInvertible("monic_mediator: sigma_A is not a 2-isomorphism");
  if (!invert(sigma_b)) throw NotInvertible("monic_mediator: sigma_B is not a 2-isomorphism");

  // Row k of p_A b is row k of b padded with zero-dimensional summands, so the
  // component maps of gamma are read off row by row.
  const std::size_t x = b.src();
  std::vector<Matrix> e;
  e.reserve(b.entries().size());
  for (std::size_t s = 0; s < w.n + w.m; ++s)
    for (std::size_t j = 0; j < x; ++j) e.push_back(s < w.n ? sigma_a.at(s, j) : sigma_b.at(s - w.n, j));
  TwoMor gamma(b, b_prime, std::move(e));

  if (whisker_left(w.p_a, gamma) != sigma_a || whisker_left(w.p_b, gamma) != sigma_b)
    throw std::logic_error("monic_mediator: projections of gamma do not reproduce sigma");
  return gamma;
}

}  // namespace twocat::biproduct
