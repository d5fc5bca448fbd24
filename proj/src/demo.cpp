#include "twocat/demo.hpp"

#include <algorithm>
#include <sstream>

#include "twocat/laws.hpp"

namespace twocat::demo {

namespace {

TwoMor random_two(laws::Rng& rng, const OneMor& f, const OneMor& g) {
  laws::LawConfig cfg;
  cfg.scalar_bound = 5;
  return laws::gen_two_mor(rng, cfg, f, g);
}

/// Index map from the plain Kronecker layout of totals to the component
/// layout of tensor(a, b).
std::vector<std::size_t> shuffle(const Decomp& a, const Decomp& b) {
  const std::size_t bt = b.total();
  std::vector<std::size_t> pair_offset;
  std::size_t off = 0;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) {
      pair_offset.push_back(off);
      off += a[x] * b[y];
    }
  std::vector<std::size_t> pos(a.total() * bt);
  const auto ao = a.offsets(), bo = b.offsets();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t u = 0; u < a[x]; ++u)
      for (std::size_t y = 0; y < b.size(); ++y)
        for (std::size_t v = 0; v < b[y]; ++v)
          pos[(ao[x] + u) * bt + bo[y] + v] = pair_offset[x * b.size() + y] + u * b[y] + v;
  return pos;
}

/// Horizontal composite recomputed from flattened entries: plain Kronecker
/// products moved into component order, summed block-diagonally.
Matrix oracle_entry(const TwoMor& xi, const TwoMor& theta, std::size_t l, std::size_t j) {
  Matrix acc(0, 0);
  for (std::size_t k = 0; k < xi.cols(); ++k) {
    const Matrix plain = kron(xi.at(l, k), theta.at(k, j));
    const auto rows = shuffle(xi.tgt().at(l, k), theta.tgt().at(k, j));
    const auto cols = shuffle(xi.src().at(l, k), theta.src().at(k, j));
    Matrix moved(plain.rows(), plain.cols());
    for (std::size_t r = 0; r < plain.rows(); ++r)
      for (std::size_t c = 0; c < plain.cols(); ++c) moved(rows[r], cols[c]) = plain(r, c);
    acc = direct_sum(acc, moved);
  }
  return acc;
}

Matrix block_of(const Matrix& m, const Decomp& rows, const Decomp& cols, std::size_t b, std::size_t a) {
  const auto ro = rows.offsets(), co = cols.offsets();
  return m.block(ro[b], co[a], rows[b], cols[a]);
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

std::string idx(std::size_t k, std::size_t j) { return std::to_string(k + 1) + std::to_string(j + 1); }

}  // namespace

Example make_example(std::uint64_t seed) {
  Example ex;
  ex.f = OneMor(3, 2, {{1, 2}, {1}, {2}, {1}, {2}, {1}});
  ex.g = OneMor(3, 2, {{2}, {1, 1, 1}, {1}, {2}, {1}, {1}});
  ex.l = OneMor(3, 2, {{1}, {2}, {1}, {1}, {1, 2}, {2}});
  ex.h = OneMor(2, 1, {{1, 1}, {1}});
  ex.k = OneMor(2, 1, {{1, 1}, {2}});
  laws::Rng rng(seed);
  ex.theta = random_two(rng, ex.f, ex.g);
  ex.eta = random_two(rng, ex.g, ex.l);
  ex.xi = random_two(rng, ex.h, ex.k);
  return ex;
}

bool DemoResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

DemoResult run_demo(std::uint64_t seed) {
  DemoResult r;
  r.ex = make_example(seed);
  const Example& e = r.ex;
  r.hf = hcompose1(e.h, e.f);
  r.eta_theta = vcompose2(e.eta, e.theta);
  r.xi_theta = hcompose2(e.xi, e.theta);
  std::ostringstream out;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  out << "f = " << to_string(e.f) << "\ng = " << to_string(e.g) << "\nl = " << to_string(e.l)
      << "\nh = " << to_string(e.h) << "\nk = " << to_string(e.k) << "\n\n";
  out << "theta : f => g = " << to_string(e.theta) << "\neta : g => l = " << to_string(e.eta)
      << "\nxi : h => k = " << to_string(e.xi) << "\n\n";

  // h o f
  out << "h o f = " << to_string(r.hf) << '\n';
  for (std::size_t j = 0; j < 3; ++j) {
    const Decomp first = tensor(e.h.at(0, 0), e.f.at(0, j)), second = tensor(e.h.at(0, 1), e.f.at(1, j));
    out << "  (1," << j + 1 << ") = h11 f" << idx(0, j) << " (+) h12 f" << idx(1, j) << " = " << to_string(first)
        << " (+) " << to_string(second) << '\n';
    check("h o f entry (1," + std::to_string(j + 1) + ") = h11 f1" + std::to_string(j + 1) + " (+) h12 f2" +
              std::to_string(j + 1),
          r.hf.at(0, j) == concat(first, second));
  }
  check("decat(h o f) = decat(h) decat(f)", decat(r.hf).mat() == mat_mul(decat(e.h).mat(), decat(e.f).mat()));

  // eta . theta
  out << "\neta . theta = " << to_string(r.eta_theta) << '\n';
  {
    const Matrix& t11 = e.theta.at(0, 0);
    const Decomp& f11 = e.f.at(0, 0);
    const Decomp& g11 = e.g.at(0, 0);
    Matrix row(e.eta.at(0, 0).rows(), 0);
    out << "  (1,1) = (";
    for (std::size_t a = 0; a < f11.size(); ++a) {
      const Matrix part = mat_mul(e.eta.at(0, 0), block_of(t11, g11, f11, 0, a));
      row = hstack(row, part);
      out << (a ? "  " : "") << "eta11 theta11^" << a + 1 << " [" << shape(part) << "]";
    }
    out << ")\n";
    check("eta . theta entry (1,1) = (eta11 theta11^1  eta11 theta11^2)", row == r.eta_theta.at(0, 0));
  }
  {
    const Decomp& g12 = e.g.at(0, 1);
    Matrix sum = Matrix::zero(e.l.at(0, 1).total(), e.f.at(0, 1).total());
    out << "  (1,2) = ";
    for (std::size_t b = 0; b < g12.size(); ++b) {
      const Matrix eb = block_of(e.eta.at(0, 1), e.l.at(0, 1), g12, 0, b);
      const Matrix tb = block_of(e.theta.at(0, 1), g12, e.f.at(0, 1), b, 0);
      sum = mat_add(sum, mat_mul(eb, tb));
      out << (b ? " + " : "") << "eta12^" << b + 1 << " theta12^" << b + 1;
    }
    out << " = " << to_string(sum) << '\n';
    check("eta . theta entry (1,2) is a sum of " + std::to_string(g12.size()) + " terms", g12.size() == 3);
    check("eta . theta entry (1,2) = eta12^1 theta12^1 + eta12^2 theta12^2 + eta12^3 theta12^3",
          sum == r.eta_theta.at(0, 1));
  }
  {
    const Decomp& l22 = e.l.at(1, 1);
    Matrix col(0, e.f.at(1, 1).total());
    out << "  (2,2) = (";
    for (std::size_t b = 0; b < l22.size(); ++b) {
      const Matrix part = mat_mul(block_of(e.eta.at(1, 1), l22, e.g.at(1, 1), b, 0), e.theta.at(1, 1));
      col = vstack(col, part);
      out << (b ? "; " : "") << "eta22^" << b + 1 << " theta22 [" << shape(part) << "]";
    }
    out << ")\n";
    check("eta . theta entry (2,2) = (eta22^1 theta22; eta22^2 theta22)", col == r.eta_theta.at(1, 1));
  }
  {
    bool ok = true;
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 3; ++j) ok = ok && r.eta_theta.at(k, j) == mat_mul(e.eta.at(k, j), e.theta.at(k, j));
    check("flatten(eta . theta) = flatten(eta) flatten(theta) entrywise", ok);
  }

  // xi o theta
  out << "\nxi o theta = " << to_string(r.xi_theta) << '\n';
  const char* names[3] = {"alpha", "beta", "gamma"};
  bool oracle_ok = true;
  for (std::size_t j = 0; j < 3; ++j) {
    const Matrix& entry = r.xi_theta.at(0, j);
    const Matrix& t1j = e.theta.at(0, j);
    const Matrix& x11 = e.xi.at(0, 0);
    const Decomp& k11 = e.k.at(0, 0);
    const Decomp& h11 = e.h.at(0, 0);
    const std::size_t top_rows = k11.total() * t1j.rows(), top_cols = h11.total() * t1j.cols();
    out << "  " << names[j] << " = (1," << j + 1 << ") = xi11 (x) theta1" << j + 1 << " (+) xi12 (x) theta2" << j + 1
        << "  [" << shape(entry) << "]\n";
    // xi11 has one-dimensional components, so its blocks are the scalars xi11^1..xi11^4.
    bool layout = true;
    for (std::size_t c = 0; c < k11.size(); ++c) {
      out << "    ";
      for (std::size_t x = 0; x < h11.size(); ++x) {
        const Matrix blk = entry.block(c * t1j.rows(), x * t1j.cols(), t1j.rows(), t1j.cols());
        layout = layout && blk == scale(x11(c, x), t1j);
        out << (x ? "  " : "") << "xi11^" << c * h11.size() + x + 1 << " theta1" << j + 1 << " [" << shape(blk)
            << "]";
      }
      out << '\n';
    }
    const Matrix lower = entry.block(top_rows, top_cols, entry.rows() - top_rows, entry.cols() - top_cols);
    out << "    xi12 (x) theta2" << j + 1 << " [" << shape(lower) << "]\n";
    layout = layout && lower == kron(e.xi.at(0, 1), e.theta.at(1, j));
    layout = layout && entry.block(0, top_cols, top_rows, entry.cols() - top_cols).is_zero() &&
             entry.block(top_rows, 0, entry.rows() - top_rows, top_cols).is_zero();
    check(std::string("xi o theta ") + names[j] + " block layout", layout);
    oracle_ok = oracle_ok && entry == oracle_entry(e.xi, e.theta, 0, j);
  }
  check("flatten(xi o theta) = Kronecker oracle", oracle_ok);

  out << "\nchecks:\n";
  for (const Check& c : r.checks) out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
  r.text = out.str();
  return r;
}

}  // namespace twocat::demo
