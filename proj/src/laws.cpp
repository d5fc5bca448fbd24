#include "twocat/laws.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "twocat/biproduct.hpp"
#include "twocat/errors.hpp"
#include "twocat/matcat.hpp"
#include "twocat/morfile.hpp"

namespace twocat::laws {

void LawConfig::validate() const {
  if (max_object == 0 || max_components == 0 || max_dim == 0 || scalar_bound == 0)
    throw std::invalid_argument("law bounds must be at least 1");
}

Rational Rng::scalar(std::size_t bound) {
  const auto b = static_cast<long>(bound);
  const long p = static_cast<long>(below(2 * bound + 1)) - b;
  const long q = static_cast<long>(between(1, bound));
  return Rational(p, q);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, std::string_view law, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ fnv1a(law)) + index);
}

Matrix gen_matrix(Rng& rng, const LawConfig& cfg, std::size_t rows, std::size_t cols) {
  std::vector<Rational> data;
  data.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) data.push_back(rng.scalar(cfg.scalar_bound));
  return Matrix(rows, cols, std::move(data));
}

Matrix gen_invertible(Rng& rng, const LawConfig& cfg, std::size_t n) {
  while (true) {
    Matrix m = gen_matrix(rng, cfg, n, n);
    if (inverse(m)) return m;
  }
}

Decomp gen_decomp(Rng& rng, const LawConfig& cfg) {
  std::vector<std::size_t> dims(rng.between(0, cfg.max_components));
  for (auto& d : dims) d = rng.between(0, cfg.max_dim);
  return Decomp(std::move(dims));
}

OneMor gen_one_mor(Rng& rng, const LawConfig& cfg, std::size_t src, std::size_t tgt) {
  std::vector<Decomp> e;
  e.reserve(src * tgt);
  for (std::size_t i = 0; i < src * tgt; ++i) e.push_back(gen_decomp(rng, cfg));
  return OneMor(src, tgt, std::move(e));
}

OneMor gen_repartition(Rng& rng, const LawConfig& cfg, const OneMor& f) {
  std::vector<Decomp> e;
  e.reserve(f.entries().size());
  for (const Decomp& d : f.entries()) {
    std::size_t left = d.total();
    const std::size_t parts = rng.between(left == 0 ? 0 : 1, cfg.max_components);
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i + 1 < parts; ++i) {
      const std::size_t x = rng.between(0, left);
      dims.push_back(x);
      left -= x;
    }
    if (parts > 0) dims.push_back(left);
    e.emplace_back(std::move(dims));
  }
  return OneMor(f.src(), f.tgt(), std::move(e));
}

TwoMor gen_two_mor(Rng& rng, const LawConfig& cfg, const OneMor& f, const OneMor& g) {
  if (f.src() != g.src() || f.tgt() != g.tgt()) throw ShapeError("gen_two_mor: non-parallel 1-morphisms");
  std::vector<Matrix> e;
  e.reserve(f.entries().size());
  for (std::size_t i = 0; i < f.entries().size(); ++i)
    e.push_back(gen_matrix(rng, cfg, g.entries()[i].total(), f.entries()[i].total()));
  return TwoMor(f, g, std::move(e));
}

namespace {

/// K * v where K sends the row index (i, j) of an (a x b) grid to (j, i).
Matrix swap_row_factors(const Matrix& m, std::size_t a, std::size_t b) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t c = 0; c < m.cols(); ++c) out(j * a + i, c) = m(i * b + j, c);
  return out;
}

}  // namespace

TwoMor hcompose2_kron_flip(const TwoMor& xi, const TwoMor& theta) {
  const TwoMor good = hcompose2(xi, theta);
  const std::size_t mid = xi.cols();
  std::vector<Matrix> entries;
  for (std::size_t l = 0; l < xi.rows(); ++l)
    for (std::size_t j = 0; j < theta.cols(); ++j) {
      std::vector<Matrix> blocks;
      for (std::size_t k = 0; k < mid; ++k) {
        const Matrix& a = xi.at(l, k);
        const Matrix& b = theta.at(k, j);
        blocks.push_back(swap_row_factors(kron(a, b), a.rows(), b.rows()));
      }
      Matrix acc(0, 0);
      for (const Matrix& b : blocks) acc = direct_sum(acc, b);
      entries.push_back(std::move(acc));
    }
  return TwoMor(good.src(), good.tgt(), std::move(entries));
}

std::size_t LawReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& l : laws) n += l.failures.size();
  return n;
}

namespace {

using Doc = morfile::Document;

/// Outcome of one case: nothing, or a message with the inputs that produced it.
struct Problem {
  std::string message;
  Doc doc;
};
using Outcome = std::optional<Problem>;

struct Law {
  std::string name;
  std::string statement;
  /// Number of cases for a config; exhaustive laws ignore the count unless it is 0.
  std::function<std::size_t(const LawConfig&)> count;
  std::function<Outcome(const LawConfig&, std::uint64_t index, Rng&)> run;
};

std::function<std::size_t(const LawConfig&)> random_count() {
  return [](const LawConfig& c) { return c.cases_per_law; };
}

std::function<std::size_t(const LawConfig&)> grid_count(std::size_t n) {
  return [n](const LawConfig& c) { return c.cases_per_law == 0 ? std::size_t{0} : n; };
}

Outcome problem(std::string message, Doc doc = {}) { return Problem{std::move(message), std::move(doc)}; }

/// Returns a problem when the 2-morphisms differ, after recording both sides.
Outcome differ(const std::string& what, const TwoMor& lhs, const TwoMor& rhs, Doc& doc,
               const std::string& lhs_expr = {}, const std::string& rhs_expr = {}) {
  const auto d = first_difference(lhs, rhs);
  if (!d) return std::nullopt;
  if (!lhs_expr.empty() && !doc.has("lhs")) {
    doc.add_let("lhs", lhs_expr);
    doc.add_let("rhs", rhs_expr);
  }
  return problem(what + ": " + *d, std::move(doc));
}

Outcome differ_mat(const std::string& what, const Matrix& lhs, const Matrix& rhs, Doc doc) {
  if (lhs == rhs) return std::nullopt;
  return problem(what + ": " + to_string(lhs) + " vs " + to_string(rhs), std::move(doc));
}

std::size_t obj(Rng& rng, const LawConfig& cfg) { return rng.between(0, cfg.max_object); }

LawConfig capped(const LawConfig& cfg, std::size_t object, std::size_t dim) {
  LawConfig c = cfg;
  c.max_object = std::min(c.max_object, object);
  c.max_dim = std::min(c.max_dim, dim);
  return c;
}

using matcat::MatMor;
using matcat::MatObj;

// -- Mat_k -----------------------------------------------------------------------

Outcome matk_axioms(const LawConfig& cfg, std::uint64_t index, Rng& rng) {
  const MatObj n{index / 7}, m{index % 7};
  Doc doc;
  doc.add_object("n", n.dim);
  doc.add_object("m", m.dim);
  const auto pa = matcat::proj(n, m, matcat::Side::first), pb = matcat::proj(n, m, matcat::Side::second);
  const auto ia = matcat::inj(n, m, matcat::Side::first), ib = matcat::inj(n, m, matcat::Side::second);
  if (auto o = differ_mat("p_A i_A = id", matcat::compose(pa, ia).mat(), Matrix::identity(n.dim), doc)) return o;
  if (auto o = differ_mat("p_B i_B = id", matcat::compose(pb, ib).mat(), Matrix::identity(m.dim), doc)) return o;
  if (auto o = differ_mat("p_A i_B = 0", matcat::compose(pa, ib).mat(), Matrix::zero(n.dim, m.dim), doc)) return o;
  if (auto o = differ_mat("p_B i_A = 0", matcat::compose(pb, ia).mat(), Matrix::zero(m.dim, n.dim), doc)) return o;
  const auto sum = matcat::add_via_biproduct(matcat::compose(ia, pa), matcat::compose(ib, pb));
  if (auto o = differ_mat("i_A p_A + i_B p_B = id", sum.mat(), Matrix::identity(n.dim + m.dim), doc)) return o;

  const MatObj x{rng.between(0, 3)};
  const MatMor fx(x, n, gen_matrix(rng, cfg, n.dim, x.dim));
  const MatMor g(x, m, gen_matrix(rng, cfg, m.dim, x.dim));
  doc.add_mat("f", fx);
  doc.add_mat("g", g);
  const auto b = matcat::pair(fx, g);
  if (auto o = differ_mat("p_A (f // g) = f", matcat::compose(pa, b).mat(), fx.mat(), doc)) return o;
  if (auto o = differ_mat("p_B (f // g) = g", matcat::compose(pb, b).mat(), g.mat(), doc)) return o;
  const MatMor h(n, x, gen_matrix(rng, cfg, x.dim, n.dim));
  const MatMor k(m, x, gen_matrix(rng, cfg, x.dim, m.dim));
  const auto c = matcat::copair(h, k);
  if (auto o = differ_mat("(h | k) i_A = h", matcat::compose(c, ia).mat(), h.mat(), doc)) return o;
  if (auto o = differ_mat("(h | k) i_B = k", matcat::compose(c, ib).mat(), k.mat(), doc)) return o;
  return std::nullopt;
}

std::pair<MatMor, MatMor> random_pair(Rng& rng, const LawConfig& cfg) {
  const MatObj s{rng.between(0, 4)}, t{rng.between(0, 4)};
  return {MatMor(s, t, gen_matrix(rng, cfg, t.dim, s.dim)), MatMor(s, t, gen_matrix(rng, cfg, t.dim, s.dim))};
}

Outcome matk_addition(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const auto [f, g] = random_pair(rng, cfg);
  Doc doc;
  doc.add_mat("f", f);
  doc.add_mat("g", g);
  if (auto o = differ_mat("codiag (f (+) g) diag = f + g", matcat::add_via_biproduct(f, g).mat(),
                          mat_add(f.mat(), g.mat()), doc))
    return o;
  if (auto o = differ_mat("f + 0 = f", matcat::add_via_biproduct(f, matcat::zero(f.src(), f.tgt())).mat(),
                          f.mat(), doc))
    return o;
  return std::nullopt;
}

Outcome matk_monoid(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const auto [f, g] = random_pair(rng, cfg);
  const MatMor h(f.src(), f.tgt(), gen_matrix(rng, cfg, f.tgt().dim, f.src().dim));
  Doc doc;
  doc.add_mat("f", f);
  doc.add_mat("g", g);
  doc.add_mat("h", h);
  using matcat::add_via_biproduct;
  if (auto o = differ_mat("f + g = g + f", add_via_biproduct(f, g).mat(), add_via_biproduct(g, f).mat(), doc))
    return o;
  if (auto o = differ_mat("(f + g) + h = f + (g + h)", add_via_biproduct(add_via_biproduct(f, g), h).mat(),
                          add_via_biproduct(f, add_via_biproduct(g, h)).mat(), doc))
    return o;
  return std::nullopt;
}

Outcome matk_canonical_r(const LawConfig&, std::uint64_t index, Rng&) {
  const MatObj n{index / 5}, m{index % 5};
  Doc doc;
  doc.add_object("n", n.dim);
  doc.add_object("m", m.dim);
  const MatMor r = matcat::canonical_r(n, m);
  const MatObj objs[2] = {n, m};
  const matcat::Side sides[2] = {matcat::Side::first, matcat::Side::second};
  for (int k = 0; k < 2; ++k)
    for (int j = 0; j < 2; ++j) {
      const auto v = matcat::compose(matcat::proj(n, m, sides[k]), matcat::compose(r, matcat::inj(n, m, sides[j])));
      const Matrix want = k == j ? Matrix::identity(objs[k].dim) : Matrix::zero(objs[k].dim, objs[j].dim);
      if (auto o = differ_mat("p_k r i_j = delta_kj", v.mat(), want, doc)) return o;
    }
  const auto inv = matcat::invert(r);
  if (!inv) return problem("r is not invertible", doc);
  return differ_mat("r r^-1 = id", matcat::compose(r, *inv).mat(), Matrix::identity(n.dim + m.dim), doc);
}

Outcome matk_dnc(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const MatObj a{rng.between(0, 16)}, b{rng.between(0, 16)}, c{rng.between(0, 16)};
  const std::size_t threshold = rng.between(1, 4);
  const MatMor x(b, a, gen_matrix(rng, cfg, a.dim, b.dim));
  const MatMor y(c, b, gen_matrix(rng, cfg, b.dim, c.dim));
  Doc doc;
  doc.add_mat("a", x);
  doc.add_mat("b", y);
  doc.add_object("threshold", threshold);
  return differ_mat("dnc_mul(a, b) = a b", matcat::dnc_mul(x, y, threshold).mat(), mat_mul(x.mat(), y.mat()), doc);
}

// -- 2Vect -----------------------------------------------------------------------

using HFn = TwoMor (*)(const TwoMor&, const TwoMor&);
HFn horizontal(const LawConfig& cfg) {
  return cfg.mutation == Mutation::kron_flip ? &hcompose2_kron_flip : &hcompose2;
}

Outcome decat_mult(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const std::size_t a = obj(rng, cfg), b = obj(rng, cfg), c = obj(rng, cfg);
  const OneMor f = gen_one_mor(rng, cfg, a, b), r = gen_one_mor(rng, cfg, b, c);
  const auto lhs = decat(hcompose1(r, f)).mat();
  const auto rhs = mat_mul(decat(r).mat(), decat(f).mat());
  if (lhs == rhs) return std::nullopt;
  Doc doc;
  doc.add_one("r", r);
  doc.add_one("f", f);
  return problem("decat(r o f) = decat(r) decat(f): " + to_string(lhs) + " vs " + to_string(rhs), std::move(doc));
}

Outcome units(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const std::size_t a = obj(rng, cfg), b = obj(rng, cfg);
  const OneMor f = gen_one_mor(rng, cfg, a, b), g = gen_one_mor(rng, cfg, a, b);
  const TwoMor t = gen_two_mor(rng, cfg, f, g);
  Doc doc;
  doc.add_one("f", f);
  doc.add_one("g", g);
  doc.add_two("t", "f", "g", t);
  if (hcompose1(id_one(b), f) != f || hcompose1(f, id_one(a)) != f)
    return problem("id o f = f = f o id", std::move(doc));
  if (auto o = differ("1 . t = t", vcompose2(id_two(g), t), t, doc)) return o;
  if (auto o = differ("t . 1 = t", vcompose2(t, id_two(f)), t, doc)) return o;
  if (auto o = differ("1_id o t = t", hcompose2(id_two(id_one(b)), t), t, doc)) return o;
  if (auto o = differ("t o 1_id = t", hcompose2(t, id_two(id_one(a))), t, doc)) return o;
  return std::nullopt;
}

Outcome interchange(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const HFn h = horizontal(cfg);
  const std::size_t A = obj(rng, cfg), B = obj(rng, cfg), C = obj(rng, cfg);
  const OneMor f = gen_one_mor(rng, cfg, A, B), g = gen_one_mor(rng, cfg, A, B), hh = gen_one_mor(rng, cfg, A, B);
  const OneMor k = gen_one_mor(rng, cfg, B, C), l = gen_one_mor(rng, cfg, B, C), m = gen_one_mor(rng, cfg, B, C);
  const TwoMor a = gen_two_mor(rng, cfg, f, g), b = gen_two_mor(rng, cfg, g, hh);
  const TwoMor a2 = gen_two_mor(rng, cfg, k, l), b2 = gen_two_mor(rng, cfg, l, m);
  const TwoMor lhs = h(vcompose2(b2, a2), vcompose2(b, a));
  const TwoMor rhs = vcompose2(h(b2, b), h(a2, a));
  if (!first_difference(lhs, rhs)) return std::nullopt;
  Doc doc;
  doc.add_one("f", f);
  doc.add_one("g", g);
  doc.add_one("h", hh);
  doc.add_one("k", k);
  doc.add_one("l", l);
  doc.add_one("m", m);
  doc.add_two("a", "f", "g", a);
  doc.add_two("b", "g", "h", b);
  doc.add_two("a2", "k", "l", a2);
  doc.add_two("b2", "l", "m", b2);
  return differ("(b2 . a2) o (b . a) = (b2 o b) . (a2 o a)", lhs, rhs, doc, "(b2 .v a2) .h2 (b .v a)",
                "(b2 .h2 b) .v (a2 .h2 a)");
}

Outcome horizontal_distributivity(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const HFn h = horizontal(cfg);
  const std::size_t A = obj(rng, cfg), B = obj(rng, cfg), C = obj(rng, cfg);
  const OneMor f = gen_one_mor(rng, cfg, A, B), g = gen_one_mor(rng, cfg, A, B);
  const OneMor k = gen_one_mor(rng, cfg, B, C), l = gen_one_mor(rng, cfg, B, C);
  const TwoMor a = gen_two_mor(rng, cfg, f, g), b = gen_two_mor(rng, cfg, f, g);
  const TwoMor c = gen_two_mor(rng, cfg, k, l), d = gen_two_mor(rng, cfg, k, l);
  Doc doc;
  doc.add_one("f", f);
  doc.add_one("g", g);
  doc.add_one("k", k);
  doc.add_one("l", l);
  doc.add_two("a", "f", "g", a);
  doc.add_two("b", "f", "g", b);
  doc.add_two("c", "k", "l", c);
  doc.add_two("d", "k", "l", d);
  if (auto o = differ("c o (a + b) = c o a + c o b", h(c, add_two(a, b)), add_two(h(c, a), h(c, b)), doc,
                      "c .h2 (a + b)", "c .h2 a + c .h2 b"))
    return o;
  if (auto o = differ("(c + d) o a = c o a + d o a", h(add_two(c, d), a), add_two(h(c, a), h(d, a)), doc,
                      "(c + d) .h2 a", "c .h2 a + d .h2 a"))
    return o;
  if (auto o = differ("k (a + b) = k a + k b", whisker_left(k, add_two(a, b)),
                      add_two(whisker_left(k, a), whisker_left(k, b)), doc, "k .h (a + b)", "k .h a + k .h b"))
    return o;
  return differ("(c + d) f = c f + d f", whisker_right(add_two(c, d), f),
                add_two(whisker_right(c, f), whisker_right(d, f)), doc, "(c + d) .h f", "c .h f + d .h f");
}

Outcome vertical_distributivity(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const std::size_t A = obj(rng, cfg), B = obj(rng, cfg);
  const OneMor e = gen_one_mor(rng, cfg, A, B), f = gen_one_mor(rng, cfg, A, B);
  const OneMor g = gen_one_mor(rng, cfg, A, B), h = gen_one_mor(rng, cfg, A, B);
  const TwoMor a = gen_two_mor(rng, cfg, g, h);
  const TwoMor b = gen_two_mor(rng, cfg, f, g), c = gen_two_mor(rng, cfg, f, g);
  const TwoMor d = gen_two_mor(rng, cfg, e, f);
  Doc doc;
  doc.add_one("e", e);
  doc.add_one("f", f);
  doc.add_one("g", g);
  doc.add_one("h", h);
  doc.add_two("a", "g", "h", a);
  doc.add_two("b", "f", "g", b);
  doc.add_two("c", "f", "g", c);
  doc.add_two("d", "e", "f", d);
  if (auto o = differ("a . (b + c) = a . b + a . c", vcompose2(a, add_two(b, c)),
                      add_two(vcompose2(a, b), vcompose2(a, c)), doc, "a .v (b + c)", "a .v b + a .v c"))
    return o;
  return differ("(b + c) . d = b . d + c . d", vcompose2(add_two(b, c), d), add_two(vcompose2(b, d), vcompose2(c, d)),
                doc, "(b + c) .v d", "b .v d + c .v d");
}

Outcome local_biproduct(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const std::size_t A = obj(rng, cfg), B = obj(rng, cfg);
  const OneMor f = gen_one_mor(rng, cfg, A, B), g = gen_one_mor(rng, cfg, A, B);
  Doc doc;
  doc.add_one("f", f);
  doc.add_one("g", g);
  const OneMor fg = oplus_one(f, g);
  const TwoMor p1 = local_proj(f, g, Side::first), p2 = local_proj(f, g, Side::second);
  const TwoMor n1 = local_inj(f, g, Side::first), n2 = local_inj(f, g, Side::second);
  if (auto o = differ("pi_1 . nu_1 = 1_f", vcompose2(p1, n1), id_two(f), doc)) return o;
  if (auto o = differ("pi_2 . nu_2 = 1_g", vcompose2(p2, n2), id_two(g), doc)) return o;
  if (auto o = differ("pi_1 . nu_2 = 0", vcompose2(p1, n2), zero_two(g, f), doc)) return o;
  if (auto o = differ("pi_2 . nu_1 = 0", vcompose2(p2, n1), zero_two(f, g), doc)) return o;
  if (auto o = differ("nu_1 . pi_1 + nu_2 . pi_2 = 1", add_two(vcompose2(n1, p1), vcompose2(n2, p2)), id_two(fg), doc))
    return o;
  if (oplus_one(f, zero_one(A, B)) != f) return problem("f (+) 0 = f", std::move(doc));
  return std::nullopt;
}

Outcome distributor_law(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const std::size_t A = obj(rng, cfg), B = obj(rng, cfg), C = obj(rng, cfg);
  const OneMor f = gen_one_mor(rng, cfg, B, C);
  const OneMor g = gen_one_mor(rng, cfg, A, B), h = gen_one_mor(rng, cfg, A, B);
  Doc doc;
  doc.add_one("f", f);
  doc.add_one("g", g);
  doc.add_one("h", h);
  const Distributor d = distributor(f, g, h);
  const OneMor fg = hcompose1(f, g), fh = hcompose1(f, h);
  if (auto o = differ("a' . a = 1", vcompose2(d.alpha_inv, d.alpha), id_two(oplus_one(fg, fh)), doc)) return o;
  if (auto o = differ("a . a' = 1", vcompose2(d.alpha, d.alpha_inv), id_two(hcompose1(f, oplus_one(g, h))), doc))
    return o;
  if (auto o = differ("(f pi_g) . a = pi_fg", vcompose2(whisker_left(f, local_proj(g, h, Side::first)), d.alpha),
                      local_proj(fg, fh, Side::first), doc))
    return o;
  if (auto o = differ("(f pi_h) . a = pi_fh", vcompose2(whisker_left(f, local_proj(g, h, Side::second)), d.alpha),
                      local_proj(fg, fh, Side::second), doc))
    return o;
  if (auto o = differ("a' . (f nu_g) = nu_fg", vcompose2(d.alpha_inv, whisker_left(f, local_inj(g, h, Side::first))),
                      local_inj(fg, fh, Side::first), doc))
    return o;
  if (auto o = differ("a' . (f nu_h) = nu_fh", vcompose2(d.alpha_inv, whisker_left(f, local_inj(g, h, Side::second))),
                      local_inj(fg, fh, Side::second), doc))
    return o;

  // Right-hand version: (g (+) h) e with g, h : B -> C and e : A -> B.
  const OneMor e = gen_one_mor(rng, cfg, A, B);
  const OneMor u = gen_one_mor(rng, cfg, B, C), v = gen_one_mor(rng, cfg, B, C);
  doc.add_one("e", e);
  doc.add_one("u", u);
  doc.add_one("v", v);
  const Distributor r = distributor_right(u, v, e);
  const OneMor ue = hcompose1(u, e), ve = hcompose1(v, e);
  if (auto o = differ("r' . r = 1", vcompose2(r.alpha_inv, r.alpha), id_two(oplus_one(ue, ve)), doc)) return o;
  if (auto o = differ("r . r' = 1", vcompose2(r.alpha, r.alpha_inv), id_two(hcompose1(oplus_one(u, v), e)), doc))
    return o;
  if (auto o = differ("(pi_u e) . r = pi_ue", vcompose2(whisker_right(local_proj(u, v, Side::first), e), r.alpha),
                      local_proj(ue, ve, Side::first), doc))
    return o;
  return differ("r' . (nu_v e) = nu_ve", vcompose2(r.alpha_inv, whisker_right(local_inj(u, v, Side::second), e)),
                local_inj(ue, ve, Side::second), doc);
}

bool is_permutation(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t row_ones = 0, col_ones = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const Rational* x : {&m(i, j), &m(j, i)}) {
        if (!x->is_zero() && !x->is_one()) return false;
      }
      row_ones += m(i, j).is_one();
      col_ones += m(j, i).is_one();
    }
    if (row_ones != 1 || col_ones != 1) return false;
  }
  return true;
}

Outcome associator_law(const LawConfig& cfg0, std::uint64_t, Rng& rng) {
  const LawConfig cfg = capped(cfg0, 2, cfg0.max_dim);
  const std::size_t A = obj(rng, cfg), B = obj(rng, cfg), C = obj(rng, cfg), D = obj(rng, cfg);
  const OneMor e = gen_one_mor(rng, cfg, A, B), e2 = gen_one_mor(rng, cfg, A, B);
  const OneMor f = gen_one_mor(rng, cfg, B, C), f2 = gen_one_mor(rng, cfg, B, C);
  const OneMor r = gen_one_mor(rng, cfg, C, D), r2 = gen_one_mor(rng, cfg, C, D);
  const TwoMor x = gen_two_mor(rng, cfg, e, e2), y = gen_two_mor(rng, cfg, f, f2), z = gen_two_mor(rng, cfg, r, r2);
  Doc doc;
  doc.add_one("e", e);
  doc.add_one("e2", e2);
  doc.add_one("f", f);
  doc.add_one("f2", f2);
  doc.add_one("r", r);
  doc.add_one("r2", r2);
  doc.add_two("x", "e", "e2", x);
  doc.add_two("y", "f", "f2", y);
  doc.add_two("z", "r", "r2", z);
  const TwoMor a = associator(r, f, e);
  for (const Matrix& m : a.entries())
    if (!is_permutation(m)) return problem("associator entry is not a permutation: " + to_string(m), std::move(doc));
  if (auto o = differ("assoc^-1 . assoc = 1", vcompose2(associator_inv(r, f, e), a), id_two(a.src()), doc)) return o;
  return differ("assoc . ((z o y) o x) = (z o (y o x)) . assoc", vcompose2(associator(r2, f2, e2), hcompose2(hcompose2(z, y), x)),
                vcompose2(hcompose2(z, hcompose2(y, x)), a), doc, "assoc(r2, f2, e2) .v ((z .h2 y) .h2 x)",
                "(z .h2 (y .h2 x)) .v assoc(r, f, e)");
}

Outcome zero_constancy(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const std::size_t A = obj(rng, cfg), B = obj(rng, cfg), C = obj(rng, cfg);
  const OneMor f = gen_one_mor(rng, cfg, A, B), g = gen_one_mor(rng, cfg, A, B), h = gen_one_mor(rng, cfg, A, B);
  const OneMor k = gen_one_mor(rng, cfg, B, C), l = gen_one_mor(rng, cfg, B, C);
  const TwoMor t = gen_two_mor(rng, cfg, f, g);
  const TwoMor s = gen_two_mor(rng, cfg, k, l);
  Doc doc;
  doc.add_one("f", f);
  doc.add_one("g", g);
  doc.add_one("h", h);
  doc.add_one("k", k);
  doc.add_one("l", l);
  doc.add_two("t", "f", "g", t);
  doc.add_two("s", "k", "l", s);
  const OneMor zl = zero_one(B, C), zr = zero_one(C, A);
  auto is_zero_after_norm = [](const TwoMor& x) { return normalize(x).is_zero(); };
  if (!is_zero_after_norm(whisker_left(zl, t))) return problem("0 t = 0", std::move(doc));
  if (!is_zero_after_norm(whisker_right(t, zr))) return problem("t 0 = 0", std::move(doc));
  if (auto o = differ("0 . t = 0", vcompose2(zero_two(g, h), t), zero_two(f, h), doc)) return o;
  if (auto o = differ("s . 0 = 0", vcompose2(s, zero_two(k, k)), zero_two(k, l), doc)) return o;
  if (auto o = differ("0 o t = 0", hcompose2(zero_two(k, l), t), zero_two(hcompose1(k, f), hcompose1(l, g)), doc))
    return o;
  if (auto o = differ("s o 0 = 0", hcompose2(s, zero_two(f, g)), zero_two(hcompose1(k, f), hcompose1(l, g)), doc))
    return o;
  return differ("1_0 = 0", id_two(zero_one(A, B)), zero_two(zero_one(A, B), zero_one(A, B)), doc);
}

Outcome normalization(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const std::size_t A = obj(rng, cfg), B = obj(rng, cfg);
  const OneMor f = gen_one_mor(rng, cfg, A, B), g = gen_one_mor(rng, cfg, A, B), h = gen_one_mor(rng, cfg, A, B);
  const TwoMor t = gen_two_mor(rng, cfg, f, g), s = gen_two_mor(rng, cfg, g, h);
  Doc doc;
  doc.add_one("f", f);
  doc.add_one("g", g);
  doc.add_one("h", h);
  doc.add_two("t", "f", "g", t);
  doc.add_two("s", "g", "h", s);
  const Normalization n = normalize(f);
  for (const Decomp& d : n.normal.entries())
    for (std::size_t c : d.dims())
      if (c == 0) return problem("normal form keeps a zero-dimensional component", std::move(doc));
  if (decat(n.normal) != decat(f)) return problem("normalization changes totals", std::move(doc));
  if (auto o = differ("backward . forward = 1", vcompose2(n.backward, n.forward), id_two(f), doc)) return o;
  if (auto o = differ("forward . backward = 1", vcompose2(n.forward, n.backward), id_two(n.normal), doc)) return o;
  return differ("norm(s . t) = norm(s) . norm(t)", normalize(vcompose2(s, t)), vcompose2(normalize(s), normalize(t)), doc,
                "norm(s .v t)", "norm(s) .v norm(t)");
}

// -- 2-biproducts --------------------------------------------------------------------

Doc witness_doc(std::size_t n, std::size_t m) {
  Doc doc;
  doc.add_object("n", n);
  doc.add_object("m", m);
  return doc;
}

Outcome first_failed(const biproduct::Report& r, Doc doc) {
  for (const auto& c : r.checks)
    if (!c.passed) return problem(c.name + (c.detail.empty() ? "" : ": " + c.detail), std::move(doc));
  return std::nullopt;
}

Outcome biproduct_conditions(const LawConfig&, std::uint64_t index, Rng&) {
  const std::size_t n = index / 5, m = index % 5;
  const auto w = biproduct::make_witness(n, m);
  return first_failed(biproduct::check_biproduct_conditions(w), witness_doc(n, m));
}

Outcome zero_lemmas(const LawConfig&, std::uint64_t index, Rng&) {
  const std::size_t n = index / 5, m = index % 5;
  const auto w = biproduct::make_witness(n, m);
  Doc doc = witness_doc(n, m);
  const OneMor ab = hcompose1(w.p_a, w.i_b), ba = hcompose1(w.p_b, w.i_a);
  if (auto o = differ("theta_AB = 0", w.theta_ab, zero_two(ab, zero_one(m, n)), doc, "theta(n, m, AB)",
                      "zero(p(n, m, 1) .h i(n, m, 2), zero(m, n))"))
    return o;
  if (auto o = differ("theta_BA = 0", w.theta_ba, zero_two(ba, zero_one(n, m)), doc)) return o;
  if (auto o = differ("1_{p_A i_B} = 0", id_two(ab), zero_two(ab, ab), doc)) return o;
  if (auto o = differ("1_{p_B i_A} = 0", id_two(ba), zero_two(ba, ba), doc)) return o;
  for (const Decomp& d : ab.entries())
    if (d.total() != 0) return problem("p_A i_B has a nonzero entry", std::move(doc));
  const OneMor aa = hcompose1(w.p_a, w.i_a);
  return differ("(p_A i_A) theta_A = theta_A (p_A i_A)", whisker_left(aa, w.theta_a), whisker_right(w.theta_a, aa),
                doc);
}

Outcome sigma_rows_law(const LawConfig&, std::uint64_t index, Rng&) {
  const std::size_t n = index / 5, m = index % 5;
  const auto w = biproduct::make_witness(n, m);
  Doc doc = witness_doc(n, m);
  const auto s = biproduct::sigma_rows(w);
  if (auto o = differ("Sigma_A = p_A theta_P", s.sigma_a, whisker_left(w.p_a, w.theta_p), doc)) return o;
  if (auto o = differ("Sigma_B = p_B theta_P", s.sigma_b, whisker_left(w.p_b, w.theta_p), doc)) return o;
  const OneMor x = hcompose1(hcompose1(w.p_a, w.i_a), w.p_a), y = hcompose1(hcompose1(w.p_a, w.i_b), w.p_b);
  const TwoMor second = vcompose2(s.sigma_a, vcompose2(inverse_of(s.split_a), local_inj(x, y, Side::second)));
  if (auto o = differ("second component of Sigma_A = 0", second, zero_two(second.src(), second.tgt()), doc)) return o;
  const OneMor u = hcompose1(hcompose1(w.p_b, w.i_a), w.p_a), v = hcompose1(hcompose1(w.p_b, w.i_b), w.p_b);
  const TwoMor first = vcompose2(s.sigma_b, vcompose2(inverse_of(s.split_b), local_inj(u, v, Side::first)));
  return differ("first component of Sigma_B = 0", first, zero_two(first.src(), first.tgt()), doc);
}

struct ConePair {
  std::size_t n, m, x;
  biproduct::Cone c, c2;
};

ConePair gen_cones(Rng& rng, const LawConfig& cfg) {
  const LawConfig legs = capped(cfg, 2, 2);
  ConePair p;
  p.n = obj(rng, cfg);
  p.m = obj(rng, cfg);
  p.x = obj(rng, legs);
  p.c = {p.x, gen_one_mor(rng, legs, p.x, p.n), gen_one_mor(rng, legs, p.x, p.m)};
  p.c2 = {p.x, gen_one_mor(rng, legs, p.x, p.n), gen_one_mor(rng, legs, p.x, p.m)};
  return p;
}

Doc cone_doc(const ConePair& p) {
  Doc doc = witness_doc(p.n, p.m);
  doc.add_one("f", p.c.f);
  doc.add_one("g", p.c.g);
  if (p.c2.f != p.c.f) doc.add_one("f2", p.c2.f);
  if (p.c2.g != p.c.g) doc.add_one("g2", p.c2.g);
  return doc;
}

Outcome universal_property(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const ConePair p = gen_cones(rng, cfg);
  const LawConfig small = capped(cfg, 2, 2);
  const TwoMor sa = gen_two_mor(rng, small, p.c.f, p.c2.f), sb = gen_two_mor(rng, small, p.c.g, p.c2.g);
  Doc doc = cone_doc(p);
  doc.add_two("sigma_A", sa);
  doc.add_two("sigma_B", sb);
  const auto w = biproduct::make_witness(p.n, p.m);
  biproduct::Mediator med, med2;
  try {
    med = biproduct::product_mediator(w, p.c);
    med2 = biproduct::product_mediator(w, p.c2);
  } catch (const std::logic_error& e) {
    return problem(e.what(), std::move(doc));
  }
  const auto want_b = matcat::pair(decat(p.c.f), decat(p.c.g)).mat();
  if (decat(med.b).mat() != want_b) return problem("decat(b) = (decat f // decat g)", std::move(doc));
  if (!invert(med.xi_a) || !invert(med.xi_b)) return problem("xi is not a 2-isomorphism", std::move(doc));
  const TwoMor gamma = biproduct::mediator_gamma(w, p.c, p.c2, sa, sb);
  if (auto o = differ("diag(i_A Sigma_A, i_B Sigma_B) = nu_1 . i_A Sigma_A . pi_1 + nu_2 . i_B Sigma_B . pi_2", gamma,
                      biproduct::mediator_gamma_explicit(w, p.c, p.c2, sa, sb), doc))
    return o;
  if (auto d = biproduct::universal_condition_failure(w, med, med2, gamma, sa, Side::first))
    return problem("p_A gamma = xi'_A^-1 . Sigma_A . xi_A: " + *d, std::move(doc));
  if (auto d = biproduct::universal_condition_failure(w, med, med2, gamma, sb, Side::second))
    return problem("p_B gamma = xi'_B^-1 . Sigma_B . xi_B: " + *d, std::move(doc));
  if (auto o = differ("reconstruct(gamma) = gamma", biproduct::reconstruct_gamma(w, gamma), gamma, doc)) return o;
  const TwoMor other = gen_two_mor(rng, small, med.b, med2.b);
  return differ("reconstruct(gamma') = gamma'", biproduct::reconstruct_gamma(w, other), other, doc);
}

Outcome theta_p_expansion(const LawConfig& cfg, std::uint64_t, Rng& rng) {
  const ConePair p = gen_cones(rng, cfg);
  const auto w = biproduct::make_witness(p.n, p.m);
  return first_failed(biproduct::check_theta_p_expansion(w, p.c), cone_doc(p));
}

Outcome canonical_equivalence(const LawConfig&, std::uint64_t index, Rng&) {
  const std::size_t n = index / 4, m = index % 4;
  const auto w = biproduct::make_witness(n, m);
  return first_failed(biproduct::check_equivalence(w, biproduct::canonical_equiv(n, m)), witness_doc(n, m));
}

TwoMor random_iso(Rng& rng, const LawConfig& cfg, const OneMor& f, const OneMor& g) {
  std::vector<Matrix> e;
  for (const Decomp& d : f.entries()) e.push_back(gen_invertible(rng, cfg, d.total()));
  return TwoMor(f, g, std::move(e));
}

Outcome monic_projections(const LawConfig& cfg0, std::uint64_t, Rng& rng) {
  const LawConfig cfg = capped(cfg0, 2, 2);
  const std::size_t n = obj(rng, cfg), m = obj(rng, cfg), x = obj(rng, cfg);
  const auto w = biproduct::make_witness(n, m);
  const OneMor b = gen_one_mor(rng, cfg, x, n + m);
  const OneMor b2 = gen_repartition(rng, cfg, b);
  const OneMor pab = hcompose1(w.p_a, b), pab2 = hcompose1(w.p_a, b2);
  const OneMor pbb = hcompose1(w.p_b, b), pbb2 = hcompose1(w.p_b, b2);
  const TwoMor sa = random_iso(rng, cfg, pab, pab2), sb = random_iso(rng, cfg, pbb, pbb2);
  Doc doc = witness_doc(n, m);
  doc.add_one("b", b);
  if (b2 != b) doc.add_one("b2", b2);
  doc.add_two("sigma_A", sa);
  doc.add_two("sigma_B", sb);
  TwoMor gamma;
  try {
    gamma = biproduct::monic_mediator(w, b, b2, sa, sb);
  } catch (const std::exception& e) {
    return problem(e.what(), std::move(doc));
  }
  if (!invert(gamma)) return problem("gamma is not a 2-isomorphism", std::move(doc));
  if (auto o = differ("p_A gamma = Sigma_A", whisker_left(w.p_a, gamma), sa, doc)) return o;
  if (auto o = differ("p_B gamma = Sigma_B", whisker_left(w.p_b, gamma), sb, doc)) return o;
  return differ("identities give 1_b",
                biproduct::monic_mediator(w, b, b, id_two(pab), id_two(pbb)), id_two(b), doc);
}

const std::vector<Law>& registry() {
  static const std::vector<Law> laws = {
      {"matk.biproduct_axioms",
       "p_A i_A = id, p_B i_B = id, p_A i_B = 0, p_B i_A = 0, i_A p_A + i_B p_B = id; pair and copair recover "
       "their components (n, m <= 6)",
       grid_count(49), matk_axioms},
      {"matk.addition_via_biproduct", "codiag (f (+) g) diag = f + g and f + 0 = f", random_count(), matk_addition},
      {"matk.addition_monoid", "f + g = g + f and (f + g) + h = f + (g + h)", random_count(), matk_monoid},
      {"matk.canonical_r", "p_k r i_j = delta_kj and r is invertible (n, m <= 4)", grid_count(25), matk_canonical_r},
      {"matk.dnc_mul", "divide-and-conquer product equals the plain product", random_count(), matk_dnc},
      {"twovect.decat_multiplicative", "decat(r o f) = decat(r) decat(f)", random_count(), decat_mult},
      {"twovect.units", "identity 1- and 2-morphisms are units for all three compositions", random_count(), units},
      {"twovect.interchange", "(b' . a') o (b . a) = (b' o b) . (a' o a)", random_count(), interchange},
      {"twovect.horizontal_distributivity", "c (a + b) = c a + c b and (c + d) a = c a + d a", random_count(),
       horizontal_distributivity},
      {"twovect.vertical_distributivity", "a . (b + c) = a . b + a . c and (b + c) . d = b . d + c . d",
       random_count(), vertical_distributivity},
      {"twovect.local_biproduct", "pi_i . nu_j = delta_ij and nu_1 . pi_1 + nu_2 . pi_2 = 1", random_count(),
       local_biproduct},
      {"twovect.distributor",
       "f (g (+) h) = fg (+) fh via a with a' . a = 1, a . a' = 1, (f pi) . a = pi, a' . (f nu) = nu; same on the "
       "right",
       random_count(), distributor_law},
      {"twovect.associator", "associator is a natural permutation isomorphism", random_count(), associator_law},
      {"twovect.zero_constancy", "composites with zero 1- or 2-morphisms are zero", random_count(), zero_constancy},
      {"twovect.normalization", "normalizers are inverse isomorphisms compatible with vertical composition",
       random_count(), normalization},
      {"biproduct.conditions",
       "p_A theta_P i_A = diag((p_A i_A) theta_A, 0), p_B theta_P i_B = diag(0, (p_B i_B) theta_B), every theta "
       "invertible (n, m <= 4)",
       grid_count(25), biproduct_conditions},
      {"biproduct.zero_lemmas", "theta_AB = 0, theta_BA = 0, 1_{p_A i_B} = 0, (p_A i_A) theta_A = theta_A (p_A i_A)",
       grid_count(25), zero_lemmas},
      {"biproduct.sigma_rows", "Sigma_A = (theta_A p_A, 0) and Sigma_B = (0, theta_B p_B) as rows over p l",
       grid_count(25), sigma_rows_law},
      {"biproduct.universal_property",
       "xi isomorphisms, p gamma = xi'^-1 . Sigma . xi, and reconstruction fixes gamma", random_count(),
       universal_property},
      {"biproduct.theta_p_expansion", "theta_P h = diag(i_A theta_A f, i_B theta_B g) up to structural isos",
       random_count(), theta_p_expansion},
      {"biproduct.canonical_equivalence", "zigzag identities for r and r' = i_A p_A (+) i_B p_B (n, m <= 3)",
       grid_count(16), canonical_equivalence},
      {"biproduct.monic_projections", "2-isos Sigma_A, Sigma_B lift to a unique 2-iso gamma", random_count(),
       monic_projections},
  };
  return laws;
}

const Law& find(std::string_view name) {
  for (const Law& l : registry())
    if (l.name == name) return l;
  throw std::invalid_argument("unknown law '" + std::string(name) + "'");
}

LawResult run(const Law& law, const LawConfig& cfg, std::optional<std::uint64_t> only_case) {
  LawResult res;
  res.name = law.name;
  res.statement = law.statement;
  const auto start = std::chrono::steady_clock::now();
  const std::size_t total = law.count(cfg);
  auto one = [&](std::uint64_t i) {
    const std::uint64_t s = case_seed(cfg.seed, law.name, i);
    Rng rng(s);
    Outcome o;
    try {
      o = law.run(cfg, i, rng);
    } catch (const std::exception& e) {
      o = problem(std::string("exception: ") + e.what());
    }
    ++res.cases;
    if (o) res.failures.push_back(Failure{i, s, std::move(o->message), morfile::serialize(o->doc)});
  };
  if (only_case) {
    if (*only_case < total) one(*only_case);
  } else {
    for (std::uint64_t i = 0; i < total; ++i) one(i);
  }
  res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << "0x" << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

}  // namespace

std::vector<std::string> law_names() {
  std::vector<std::string> out;
  for (const Law& l : registry()) out.push_back(l.name);
  return out;
}

LawResult run_law(std::string_view name, const LawConfig& cfg, std::optional<std::uint64_t> only_case) {
  cfg.validate();
  return run(find(name), cfg, only_case);
}

LawReport run_suite(const LawConfig& cfg) {
  cfg.validate();
  LawReport rep;
  rep.config = cfg;
  for (const Law& l : registry()) rep.laws.push_back(run(l, cfg, std::nullopt));
  return rep;
}

std::string to_text(const LawReport& report, bool timings) {
  std::ostringstream out;
  const LawConfig& c = report.config;
  out << "seed=" << c.seed << " cases=" << c.cases_per_law << " max_object=" << c.max_object
      << " max_components=" << c.max_components << " max_dim=" << c.max_dim << " scalar_bound=" << c.scalar_bound
      << " mutation=" << (c.mutation == Mutation::kron_flip ? "kron-flip" : "none") << '\n';
  std::size_t cases = 0;
  for (const LawResult& l : report.laws) {
    cases += l.cases;
    out << (l.ok() ? "PASS " : "FAIL ") << l.name << " cases=" << l.cases << " failures=" << l.failures.size();
    if (timings) out << " time=" << std::fixed << std::setprecision(1) << l.elapsed_ms << "ms";
    out << "  " << l.statement << '\n';
    for (const Failure& f : l.failures) {
      out << "  case " << f.case_index << " seed " << hex(f.case_seed) << ": " << f.message << '\n';
      std::istringstream lines(f.counterexample);
      for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
    }
  }
  out << "laws=" << report.laws.size() << " cases=" << cases << " failures=" << report.failure_count() << '\n';
  return out.str();
}

std::string to_json(const LawReport& report, bool timings) {
  using nlohmann::json;
  const LawConfig& c = report.config;
  json j;
  j["config"] = {{"seed", c.seed},
                 {"cases_per_law", c.cases_per_law},
                 {"max_object", c.max_object},
                 {"max_components", c.max_components},
                 {"max_dim", c.max_dim},
                 {"scalar_bound", c.scalar_bound},
                 {"mutation", c.mutation == Mutation::kron_flip ? "kron-flip" : "none"}};
  j["laws"] = json::array();
  for (const LawResult& l : report.laws) {
    json e = {{"name", l.name}, {"statement", l.statement}, {"cases", l.cases}, {"passed", l.ok()}};
    if (timings) e["elapsed_ms"] = l.elapsed_ms;
    e["failures"] = json::array();
    for (const Failure& f : l.failures)
      e["failures"].push_back({{"case", f.case_index},
                               {"seed", hex(f.case_seed)},
                               {"message", f.message},
                               {"counterexample", f.counterexample}});
    j["laws"].push_back(std::move(e));
  }
  j["failures"] = report.failure_count();
  return j.dump(2) + "\n";
}

}  // namespace twocat::laws
