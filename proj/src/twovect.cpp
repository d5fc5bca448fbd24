#include "twocat/twovect.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "twocat/errors.hpp"

namespace twocat {

// -- Decomp -------------------------------------------------------------------

std::size_t Decomp::total() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

std::vector<std::size_t> Decomp::offsets() const {
  std::vector<std::size_t> off(dims_.size() + 1, 0);
  std::partial_sum(dims_.begin(), dims_.end(), off.begin() + 1);
  return off;
}

Decomp concat(const Decomp& a, const Decomp& b) {
  std::vector<std::size_t> d = a.dims();
  d.insert(d.end(), b.dims().begin(), b.dims().end());
  return Decomp(std::move(d));
}

Decomp tensor(const Decomp& a, const Decomp& b) {
  std::vector<std::size_t> d;
  d.reserve(a.size() * b.size());
  for (std::size_t x : a.dims())
    for (std::size_t y : b.dims()) d.push_back(x * y);
  return Decomp(std::move(d));
}

std::string to_string(const Decomp& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  return s + "]";
}

// -- OneMor / TwoMor ------------------------------------------------------------

OneMor::OneMor(std::size_t src, std::size_t tgt, std::vector<Decomp> entries)
    : src_(src), tgt_(tgt), entries_(std::move(entries)) {
  if (entries_.size() != src_ * tgt_)
    throw ShapeError("1-morphism " + std::to_string(src_) + " -> " + std::to_string(tgt_) +
                     " needs " + std::to_string(src_ * tgt_) + " entries, got " +
                     std::to_string(entries_.size()));
}

std::string to_string(const OneMor& f) {
  if (f.entries().empty()) return "[]";
  std::string s = "[";
  for (std::size_t k = 0; k < f.tgt(); ++k) {
    if (k) s += "; ";
    for (std::size_t j = 0; j < f.src(); ++j) {
      if (j) s += ' ';
      s += to_string(f.at(k, j));
    }
  }
  return s + "]";
}

TwoMor::TwoMor(OneMor src, OneMor tgt, std::vector<Matrix> entries)
    : src_(std::move(src)), tgt_(std::move(tgt)), entries_(std::move(entries)) {
  if (src_.src() != tgt_.src() || src_.tgt() != tgt_.tgt())
    throw ShapeError("2-morphism between non-parallel 1-morphisms");
  if (entries_.size() != src_.src() * src_.tgt())
    throw ShapeError("2-morphism grid has " + std::to_string(entries_.size()) + " entries, expected " +
                     std::to_string(src_.src() * src_.tgt()));
  for (std::size_t k = 0; k < src_.tgt(); ++k)
    for (std::size_t j = 0; j < src_.src(); ++j) {
      const Matrix& m = at(k, j);
      const std::size_t r = tgt_.at(k, j).total(), c = src_.at(k, j).total();
      if (m.rows() != r || m.cols() != c)
        throw ShapeError("2-morphism entry (" + std::to_string(k) + "," + std::to_string(j) +
                         ") is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected " + std::to_string(r) + "x" + std::to_string(c));
    }
}

bool TwoMor::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Matrix& m) { return m.is_zero(); });
}

std::string to_string(const TwoMor& theta) {
  if (theta.entries().empty()) return "[]";
  std::string s = "[";
  for (std::size_t k = 0; k < theta.rows(); ++k) {
    if (k) s += "; ";
    for (std::size_t j = 0; j < theta.cols(); ++j) {
      if (j) s += ' ';
      s += to_string(theta.at(k, j));
    }
  }
  return s + "]";
}

// -- identities and zeros ----------------------------------------------------

OneMor id_one(std::size_t n) {
  std::vector<Decomp> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Decomp{1};
  return OneMor(n, n, std::move(e));
}

OneMor zero_one(std::size_t src, std::size_t tgt) {
  return OneMor(src, tgt, std::vector<Decomp>(src * tgt));
}

TwoMor id_two(const OneMor& f) {
  std::vector<Matrix> e;
  e.reserve(f.entries().size());
  for (const auto& d : f.entries()) e.push_back(Matrix::identity(d.total()));
  return TwoMor(f, f, std::move(e));
}

TwoMor zero_two(const OneMor& f, const OneMor& g) {
  if (f.src() != g.src() || f.tgt() != g.tgt())
    throw ShapeError("zero_two: 1-morphisms are not parallel");
  std::vector<Matrix> e;
  e.reserve(f.entries().size());
  for (std::size_t i = 0; i < f.entries().size(); ++i)
    e.push_back(Matrix::zero(g.entries()[i].total(), f.entries()[i].total()));
  return TwoMor(f, g, std::move(e));
}

// -- 1-morphisms -----------------------------------------------------------------

OneMor hcompose1(const OneMor& r, const OneMor& f) {
  if (f.tgt() != r.src())
    throw ShapeError("hcompose1: target " + std::to_string(f.tgt()) + " does not match source " +
                     std::to_string(r.src()));
  std::vector<Decomp> e;
  e.reserve(r.tgt() * f.src());
  for (std::size_t l = 0; l < r.tgt(); ++l)
    for (std::size_t j = 0; j < f.src(); ++j) {
      std::vector<std::size_t> dims;
      for (std::size_t k = 0; k < f.tgt(); ++k) {
        const Decomp t = tensor(r.at(l, k), f.at(k, j));
        dims.insert(dims.end(), t.dims().begin(), t.dims().end());
      }
      e.emplace_back(std::move(dims));
    }
  return OneMor(f.src(), r.tgt(), std::move(e));
}

matcat::MatMor decat(const OneMor& f) {
  Matrix m(f.tgt(), f.src());
  for (std::size_t k = 0; k < f.tgt(); ++k)
    for (std::size_t j = 0; j < f.src(); ++j) m(k, j) = static_cast<long>(f.at(k, j).total());
  return matcat::MatMor(matcat::MatObj{f.src()}, matcat::MatObj{f.tgt()}, std::move(m));
}

namespace {

void require_parallel(const OneMor& f, const OneMor& g, const char* what) {
  if (f.src() != g.src() || f.tgt() != g.tgt())
    throw ShapeError(std::string(what) + ": 1-morphisms are not parallel");
}

}  // namespace

OneMor oplus_one(const OneMor& f, const OneMor& g) {
  require_parallel(f, g, "oplus_one");
  std::vector<Decomp> e;
  e.reserve(f.entries().size());
  for (std::size_t i = 0; i < f.entries().size(); ++i)
    e.push_back(concat(f.entries()[i], g.entries()[i]));
  return OneMor(f.src(), f.tgt(), std::move(e));
}

TwoMor local_proj(const OneMor& f, const OneMor& g, Side side) {
  const OneMor sum = oplus_one(f, g);
  std::vector<Matrix> e;
  e.reserve(sum.entries().size());
  for (std::size_t i = 0; i < sum.entries().size(); ++i) {
    const std::size_t a = f.entries()[i].total(), b = g.entries()[i].total();
    e.push_back(side == Side::first ? hstack(Matrix::identity(a), Matrix::zero(a, b))
                                    : hstack(Matrix::zero(b, a), Matrix::identity(b)));
  }
  return TwoMor(sum, side == Side::first ? f : g, std::move(e));
}

TwoMor local_inj(const OneMor& f, const OneMor& g, Side side) {
  const TwoMor p = local_proj(f, g, side);
  std::vector<Matrix> e;
  e.reserve(p.entries().size());
  for (const auto& m : p.entries()) e.push_back(m.transpose());
  return TwoMor(p.tgt(), p.src(), std::move(e));
}

// -- 2-morphisms ---------------------------------------------------------------

TwoMor vcompose2(const TwoMor& eta, const TwoMor& theta) {
  if (theta.tgt() != eta.src())
    throw ShapeError("vcompose2: target of the first 2-morphism is not the source of the second");
  std::vector<Matrix> e;
  e.reserve(theta.entries().size());
  for (std::size_t i = 0; i < theta.entries().size(); ++i)
    e.push_back(mat_mul(eta.entries()[i], theta.entries()[i]));
  return TwoMor(theta.src(), eta.tgt(), std::move(e));
}

TwoMor hcompose2(const TwoMor& xi, const TwoMor& theta) {
  if (theta.src().tgt() != xi.src().src())
    throw ShapeError("hcompose2: target object " + std::to_string(theta.src().tgt()) +
                     " does not match source object " + std::to_string(xi.src().src()));
  const OneMor src = hcompose1(xi.src(), theta.src());
  const OneMor tgt = hcompose1(xi.tgt(), theta.tgt());
  const std::size_t mid = theta.src().tgt();
  std::vector<Matrix> e;
  e.reserve(src.entries().size());
  for (std::size_t m = 0; m < xi.rows(); ++m)
    for (std::size_t j = 0; j < theta.cols(); ++j) {
      Matrix entry(tgt.at(m, j).total(), src.at(m, j).total());
      std::size_t r0 = 0, c0 = 0;
      for (std::size_t k = 0; k < mid; ++k) {
        const Matrix b = block_kron(xi.at(m, k), xi.tgt().at(m, k).dims(), xi.src().at(m, k).dims(),
                                    theta.at(k, j), theta.tgt().at(k, j).dims(),
                                    theta.src().at(k, j).dims());
        entry.set_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
      }
      e.push_back(std::move(entry));
    }
  return TwoMor(src, tgt, std::move(e));
}

TwoMor whisker_left(const OneMor& f, const TwoMor& theta) { return hcompose2(id_two(f), theta); }

TwoMor whisker_right(const TwoMor& theta, const OneMor& f) { return hcompose2(theta, id_two(f)); }

TwoMor add_two(const TwoMor& a, const TwoMor& b) {
  if (a.src() != b.src() || a.tgt() != b.tgt())
    throw ShapeError("add_two: 2-morphisms are not parallel");
  std::vector<Matrix> e;
  e.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    e.push_back(mat_add(a.entries()[i], b.entries()[i]));
  return TwoMor(a.src(), a.tgt(), std::move(e));
}

TwoMor scale_two(const Rational& s, const TwoMor& a) {
  std::vector<Matrix> e;
  e.reserve(a.entries().size());
  for (const auto& m : a.entries()) e.push_back(scale(s, m));
  return TwoMor(a.src(), a.tgt(), std::move(e));
}

TwoMor oplus_two(const TwoMor& a, const TwoMor& b) {
  const OneMor src = oplus_one(a.src(), b.src());
  const OneMor tgt = oplus_one(a.tgt(), b.tgt());
  std::vector<Matrix> e;
  e.reserve(src.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    e.push_back(direct_sum(a.entries()[i], b.entries()[i]));
  return TwoMor(src, tgt, std::move(e));
}

std::optional<TwoMor> invert(const TwoMor& theta) {
  std::vector<Matrix> e;
  e.reserve(theta.entries().size());
  for (const auto& m : theta.entries()) {
    auto inv = inverse(m);
    if (!inv) return std::nullopt;
    e.push_back(std::move(*inv));
  }
  return TwoMor(theta.tgt(), theta.src(), std::move(e));
}

TwoMor inverse_of(const TwoMor& theta) {
  auto inv = invert(theta);
  if (!inv) throw NotInvertible("2-morphism is not invertible");
  return std::move(*inv);
}

MatrixGrid flatten(const TwoMor& theta) { return {theta.rows(), theta.cols(), theta.entries()}; }

// -- structural 2-isomorphisms ---------------------------------------------------

namespace {

/// Identifies a component of an iterated composite by its path through the
/// contracted indices and factor components.
using Label = std::vector<std::size_t>;

struct LabelledDecomp {
  std::vector<Label> labels;
  std::vector<std::size_t> dims;

  void add(Label l, std::size_t d) {
    labels.push_back(std::move(l));
    dims.push_back(d);
  }
};

/// Permutation matrix moving every labelled component of `from` onto the
/// component of `to` with the same label. Entry shape to.total x from.total.
Matrix block_permutation(const LabelledDecomp& from, const LabelledDecomp& to) {
  if (from.labels.size() != to.labels.size())
    throw std::logic_error("block_permutation: component counts differ");
  std::map<Label, std::size_t> target_pos;
  for (std::size_t i = 0; i < to.labels.size(); ++i) target_pos.emplace(to.labels[i], i);

  std::vector<std::size_t> to_off(to.dims.size() + 1, 0);
  std::partial_sum(to.dims.begin(), to.dims.end(), to_off.begin() + 1);

  Matrix p(to_off.back(), to_off.back());
  std::size_t col = 0;
  for (std::size_t i = 0; i < from.labels.size(); ++i) {
    const auto it = target_pos.find(from.labels[i]);
    if (it == target_pos.end() || to.dims[it->second] != from.dims[i])
      throw std::logic_error("block_permutation: unmatched component");
    for (std::size_t t = 0; t < from.dims[i]; ++t) p(to_off[it->second] + t, col + t) = 1;
    col += from.dims[i];
  }
  if (col != p.cols()) throw std::logic_error("block_permutation: totals differ");
  return p;
}

void check_matches(const LabelledDecomp& l, const Decomp& d) {
  if (l.dims != d.dims()) throw std::logic_error("structural iso: component layout mismatch");
}

/// Inverse of a 2-morphism whose entries are permutation matrices.
TwoMor transpose_iso(const TwoMor& a) {
  std::vector<Matrix> entries;
  entries.reserve(a.entries().size());
  for (const auto& m : a.entries()) entries.push_back(m.transpose());
  return TwoMor(a.tgt(), a.src(), std::move(entries));
}

}  // namespace

Normalization normalize(const OneMor& f) {
  std::vector<Decomp> e;
  e.reserve(f.entries().size());
  for (const auto& d : f.entries()) {
    std::vector<std::size_t> kept;
    std::copy_if(d.dims().begin(), d.dims().end(), std::back_inserter(kept),
                 [](std::size_t x) { return x != 0; });
    e.emplace_back(std::move(kept));
  }
  OneMor normal(f.src(), f.tgt(), std::move(e));
  // Deleting zero-dimensional summands leaves every total unchanged, so both
  // directions are identity matrices between differently partitioned spaces.
  std::vector<Matrix> ids;
  ids.reserve(f.entries().size());
  for (const auto& d : f.entries()) ids.push_back(Matrix::identity(d.total()));
  TwoMor forward(f, normal, ids);
  TwoMor backward(normal, f, std::move(ids));
  return {std::move(normal), std::move(forward), std::move(backward)};
}

TwoMor normalize(const TwoMor& theta) {
  const Normalization s = normalize(theta.src());
  const Normalization t = normalize(theta.tgt());
  return vcompose2(t.forward, vcompose2(theta, s.backward));
}

TwoMor associator(const OneMor& r, const OneMor& f, const OneMor& e) {
  // e : A -> B, f : B -> C, r : C -> D
  if (e.tgt() != f.src() || f.tgt() != r.src())
    throw ShapeError("associator: 1-morphisms are not composable");
  const OneMor left = hcompose1(hcompose1(r, f), e);
  const OneMor right = hcompose1(r, hcompose1(f, e));
  const std::size_t A = e.src(), B = e.tgt(), C = f.tgt(), D = r.tgt();

  std::vector<Matrix> entries;
  entries.reserve(A * D);
  for (std::size_t d = 0; d < D; ++d)
    for (std::size_t a = 0; a < A; ++a) {
      LabelledDecomp from, to;
      // ((r f) e)(d, a): b outermost, then (c, x, y), then z.
      for (std::size_t b = 0; b < B; ++b)
        for (std::size_t c = 0; c < C; ++c)
          for (std::size_t x = 0; x < r.at(d, c).size(); ++x)
            for (std::size_t y = 0; y < f.at(c, b).size(); ++y)
              for (std::size_t z = 0; z < e.at(b, a).size(); ++z)
                from.add({b, c, x, y, z}, r.at(d, c)[x] * f.at(c, b)[y] * e.at(b, a)[z]);
      // (r (f e))(d, a): c outermost, then x, then (b, y, z).
      for (std::size_t c = 0; c < C; ++c)
        for (std::size_t x = 0; x < r.at(d, c).size(); ++x)
          for (std::size_t b = 0; b < B; ++b)
            for (std::size_t y = 0; y < f.at(c, b).size(); ++y)
              for (std::size_t z = 0; z < e.at(b, a).size(); ++z)
                to.add({b, c, x, y, z}, r.at(d, c)[x] * f.at(c, b)[y] * e.at(b, a)[z]);
      check_matches(from, left.at(d, a));
      check_matches(to, right.at(d, a));
      entries.push_back(block_permutation(from, to));
    }
  return TwoMor(left, right, std::move(entries));
}

TwoMor associator_inv(const OneMor& r, const OneMor& f, const OneMor& e) {
  return transpose_iso(associator(r, f, e));
}

Distributor distributor(const OneMor& f, const OneMor& g, const OneMor& h) {
  require_parallel(g, h, "distributor");
  if (g.tgt() != f.src()) throw ShapeError("distributor: 1-morphisms are not composable");
  const OneMor split = oplus_one(hcompose1(f, g), hcompose1(f, h));
  const OneMor joined = hcompose1(f, oplus_one(g, h));
  const std::size_t A = g.src(), B = g.tgt(), C = f.tgt();
  const OneMor* parts[2] = {&g, &h};

  std::vector<Matrix> entries;
  entries.reserve(A * C);
  for (std::size_t c = 0; c < C; ++c)
    for (std::size_t a = 0; a < A; ++a) {
      LabelledDecomp from, to;
      // (f g (+) f h)(c, a): summand outermost, then b, x, y.
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t b = 0; b < B; ++b)
          for (std::size_t x = 0; x < f.at(c, b).size(); ++x)
            for (std::size_t y = 0; y < parts[s]->at(b, a).size(); ++y)
              from.add({s, b, x, y}, f.at(c, b)[x] * parts[s]->at(b, a)[y]);
      // (f (g (+) h))(c, a): b, x, then the summand, then y.
      for (std::size_t b = 0; b < B; ++b)
        for (std::size_t x = 0; x < f.at(c, b).size(); ++x)
          for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t y = 0; y < parts[s]->at(b, a).size(); ++y)
              to.add({s, b, x, y}, f.at(c, b)[x] * parts[s]->at(b, a)[y]);
      check_matches(from, split.at(c, a));
      check_matches(to, joined.at(c, a));
      entries.push_back(block_permutation(from, to));
    }
  TwoMor alpha(split, joined, std::move(entries));
  TwoMor alpha_inv = transpose_iso(alpha);
  return {std::move(alpha), std::move(alpha_inv)};
}

Distributor distributor_right(const OneMor& g, const OneMor& h, const OneMor& e) {
  require_parallel(g, h, "distributor_right");
  if (e.tgt() != g.src()) throw ShapeError("distributor_right: 1-morphisms are not composable");
  const OneMor split = oplus_one(hcompose1(g, e), hcompose1(h, e));
  const OneMor joined = hcompose1(oplus_one(g, h), e);
  const std::size_t A = e.src(), B = e.tgt(), C = g.tgt();
  const OneMor* parts[2] = {&g, &h};

  std::vector<Matrix> entries;
  entries.reserve(A * C);
  for (std::size_t c = 0; c < C; ++c)
    for (std::size_t a = 0; a < A; ++a) {
      LabelledDecomp from, to;
      // (g e (+) h e)(c, a): summand, b, x, z.
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t b = 0; b < B; ++b)
          for (std::size_t x = 0; x < parts[s]->at(c, b).size(); ++x)
            for (std::size_t z = 0; z < e.at(b, a).size(); ++z)
              from.add({s, b, x, z}, parts[s]->at(c, b)[x] * e.at(b, a)[z]);
      // ((g (+) h) e)(c, a): b, summand, x, z.
      for (std::size_t b = 0; b < B; ++b)
        for (std::size_t s = 0; s < 2; ++s)
          for (std::size_t x = 0; x < parts[s]->at(c, b).size(); ++x)
            for (std::size_t z = 0; z < e.at(b, a).size(); ++z)
              to.add({s, b, x, z}, parts[s]->at(c, b)[x] * e.at(b, a)[z]);
      check_matches(from, split.at(c, a));
      check_matches(to, joined.at(c, a));
      entries.push_back(block_permutation(from, to));
    }
  TwoMor alpha(split, joined, std::move(entries));
  TwoMor alpha_inv = transpose_iso(alpha);
  return {std::move(alpha), std::move(alpha_inv)};
}

}  // namespace twocat

namespace twocat {

std::optional<std::string> first_difference(const TwoMor& a, const TwoMor& b) {
  if (a.src() != b.src()) return "sources differ: " + to_string(a.src()) + " vs " + to_string(b.src());
  if (a.tgt() != b.tgt()) return "targets differ: " + to_string(a.tgt()) + " vs " + to_string(b.tgt());
  for (std::size_t k = 0; k < a.rows(); ++k)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(k, j) != b.at(k, j)) {
        const Matrix& x = a.at(k, j);
        const Matrix& y = b.at(k, j);
        std::string where = "entry (" + std::to_string(k) + "," + std::to_string(j) + ")";
        if (x.rows() * x.cols() > 16) {
          for (std::size_t r = 0; r < x.rows(); ++r)
            for (std::size_t c = 0; c < x.cols(); ++c)
              if (x(r, c) != y(r, c))
                return where + " element (" + std::to_string(r) + "," + std::to_string(c) + "): " + x(r, c).str() +
                       " vs " + y(r, c).str();
        }
        return where + ": " + to_string(x) + " vs " + to_string(y);
      }
  return std::nullopt;
}

}  // namespace twocat
