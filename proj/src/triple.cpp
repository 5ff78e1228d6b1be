#include "kantor/triple.hpp"

#include <sstream>

#include "kantor/errors.hpp"
#include "kantor/parallel.hpp"

namespace kantor {

SignPair::SignPair(int e, int d) : epsilon(e), delta(d) {
  if ((e != 1 && e != -1) || (d != 1 && d != -1))
    throw InputError("signature entries must be +1 or -1");
}

std::string SignPair::str() const {
  std::ostringstream os;
  os << "(" << (epsilon > 0 ? "+1" : "-1") << "," << (delta > 0 ? "+1" : "-1") << ")";
  return os.str();
}

TripleSystem::TripleSystem(size_t dim, std::string label)
    : dim_(dim), t_(dim * dim * dim * dim), label_(std::move(label)) {}

Vec TripleSystem::product_basis(size_t i, size_t j, size_t k) const {
  Vec r(dim_);
  for (size_t l = 0; l < dim_; ++l) r[l] = t(i, j, k, l);
  return r;
}

Vec TripleSystem::product(const Vec& x, const Vec& y, const Vec& z) const {
  if (x.dim() != dim_ || y.dim() != dim_ || z.dim() != dim_)
    throw DimensionMismatch("triple product argument dims differ from system dim");
  Vec r(dim_);
  for (size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (size_t k = 0; k < dim_; ++k) {
        if (z[k].is_zero()) continue;
        const Scalar c = xy * z[k];
        for (size_t l = 0; l < dim_; ++l) {
          if (!t(i, j, k, l).is_zero()) r[l] += c * t(i, j, k, l);
        }
      }
    }
  }
  return r;
}

Mat TripleSystem::L(const Vec& x, const Vec& y) const {
  if (x.dim() != dim_ || y.dim() != dim_)
    throw DimensionMismatch("L operator argument dims differ from system dim");
  Mat m(dim_, dim_);
  for (size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (size_t k = 0; k < dim_; ++k)
        for (size_t l = 0; l < dim_; ++l) {
          if (!t(i, j, k, l).is_zero()) m.at(l, k) += xy * t(i, j, k, l);
        }
    }
  }
  return m;
}

Mat TripleSystem::L_basis(size_t i, size_t j) const {
  Mat m(dim_, dim_);
  for (size_t k = 0; k < dim_; ++k)
    for (size_t l = 0; l < dim_; ++l) m.at(l, k) = t(i, j, k, l);
  return m;
}

Mat TripleSystem::K(const Vec& x, const Vec& y, int delta) const {
  const Scalar d = SignPair(-1, delta).del();
  Mat m(dim_, dim_);
  for (size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      // x z y - delta * y z x, contributions per basis pair (i, j).
      for (size_t k = 0; k < dim_; ++k)
        for (size_t l = 0; l < dim_; ++l) {
          if (!t(i, k, j, l).is_zero()) m.at(l, k) += xy * t(i, k, j, l);
          if (!t(j, k, i, l).is_zero()) m.at(l, k) -= d * xy * t(j, k, i, l);
        }
    }
  }
  return m;
}

Mat TripleSystem::K_basis(size_t i, size_t j, int delta) const {
  const Scalar d = SignPair(-1, delta).del();
  Mat m(dim_, dim_);
  for (size_t k = 0; k < dim_; ++k)
    for (size_t l = 0; l < dim_; ++l) m.at(l, k) = t(i, k, j, l) - d * t(j, k, i, l);
  return m;
}

TripleSystem TripleSystem::transform_input(size_t slot, const Mat& s) const {
  if (!s.is_square() || s.rows() != dim_)
    throw DimensionMismatch("transform operator dim differs from system dim");
  TripleSystem r(dim_, label_);
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < dim_; ++j)
      for (size_t k = 0; k < dim_; ++k) {
        const size_t idx[3] = {i, j, k};
        // Replace e_{idx[slot]} by S e_{idx[slot]} = sum_m S(m, idx[slot]) e_m.
        for (size_t m = 0; m < dim_; ++m) {
          const Scalar& c = s.at(m, idx[slot]);
          if (c.is_zero()) continue;
          size_t a = i, b = j, cc = k;
          (slot == 0 ? a : slot == 1 ? b : cc) = m;
          for (size_t l = 0; l < dim_; ++l) {
            if (!t(a, b, cc, l).is_zero()) r.t(i, j, k, l) += c * t(a, b, cc, l);
          }
        }
      }
  return r;
}

TripleSystem TripleSystem::transform_output(const Mat& s) const {
  if (!s.is_square() || s.rows() != dim_)
    throw DimensionMismatch("transform operator dim differs from system dim");
  TripleSystem r(dim_, label_);
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < dim_; ++j)
      for (size_t k = 0; k < dim_; ++k)
        for (size_t l = 0; l < dim_; ++l) {
          Scalar acc;
          for (size_t m = 0; m < dim_; ++m) {
            if (!s.at(l, m).is_zero() && !t(i, j, k, m).is_zero())
              acc += s.at(l, m) * t(i, j, k, m);
          }
          r.t(i, j, k, l) = acc;
        }
  return r;
}

namespace {

struct BasisOps {
  std::vector<Mat> L;  // n*n entries, index i*n + j
  std::vector<Mat> K;
  size_t n;

  explicit BasisOps(const TripleSystem& ts, int delta, bool with_k) : n(ts.dim()) {
    L.reserve(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) L.push_back(ts.L_basis(i, j));
    if (with_k) {
      K.reserve(n * n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) K.push_back(ts.K_basis(i, j, delta));
    }
  }

  // sum_m w[m] * ops[m*n + second]  (operator with a general first argument)
  Mat mix_first(const std::vector<Mat>& ops, const Vec& w, size_t second) const {
    Mat acc(n, n);
    for (size_t m = 0; m < n; ++m) {
      if (w[m].is_zero()) continue;
      acc += w[m] * ops[m * n + second];
    }
    return acc;
  }

  // sum_m w[m] * ops[first*n + m]  (operator with a general second argument)
  Mat mix_second(const std::vector<Mat>& ops, size_t first, const Vec& w) const {
    Mat acc(n, n);
    for (size_t m = 0; m < n; ++m) {
      if (w[m].is_zero()) continue;
      acc += w[m] * ops[first * n + m];
    }
    return acc;
  }
};

std::vector<size_t> decode4(size_t idx, size_t n) {
  std::vector<size_t> q(4);
  q[3] = idx % n; idx /= n;
  q[2] = idx % n; idx /= n;
  q[1] = idx % n; idx /= n;
  q[0] = idx;
  return q;
}

}  // namespace

Report check_gjts(const TripleSystem& ts, int jobs) {
  Report rep;
  rep.subject = ts.label().empty() ? "triple-system" : ts.label();
  rep.suite = "gjts";
  const size_t n = ts.dim();
  const BasisOps ops(ts, 1, false);

  auto sides = [&](const std::vector<size_t>& q) {
    const size_t u = q[0], v = q[1], x = q[2], y = q[3];
    const Mat& Luv = ops.L[u * n + v];
    const Mat& Lxy = ops.L[x * n + y];
    const Mat lhs = Luv * Lxy - Lxy * Luv;
    const Mat rhs = ops.mix_first(ops.L, ts.product_basis(u, v, x), y) -
                    ops.mix_second(ops.L, x, ts.product_basis(v, u, y));
    return std::make_pair(lhs, rhs);
  };

  auto bad = first_violation(
      n * n * n * n,
      [&](size_t idx) {
        auto [lhs, rhs] = sides(decode4(idx, n));
        return lhs == rhs;
      },
      jobs);
  if (!bad) {
    rep.add_pass("[L(u,v),L(x,y)] == L(uvx,y) - L(x,vuy)");
  } else {
    auto q = decode4(*bad, n);
    auto [lhs, rhs] = sides(q);
    rep.add_fail("[L(u,v),L(x,y)] == L(uvx,y) - L(x,vuy)", {q, lhs.str(), rhs.str()});
  }
  return rep;
}

Report check_fkts(const TripleSystem& ts, const SignPair& signs, int jobs) {
  Report rep;
  rep.subject = ts.label().empty() ? "triple-system" : ts.label();
  rep.suite = "fkts" + signs.str();
  const size_t n = ts.dim();
  const Scalar eps = signs.eps();
  const BasisOps ops(ts, signs.delta, true);

  auto fk1_sides = [&](const std::vector<size_t>& q) {
    const size_t u = q[0], v = q[1], x = q[2], y = q[3];
    const Mat& Luv = ops.L[u * n + v];
    const Mat& Lxy = ops.L[x * n + y];
    const Mat lhs = Luv * Lxy - Lxy * Luv;
    const Mat rhs = ops.mix_first(ops.L, ts.product_basis(u, v, x), y) +
                    eps * ops.mix_second(ops.L, x, ts.product_basis(v, u, y));
    return std::make_pair(lhs, rhs);
  };
  auto fk2_sides = [&](const std::vector<size_t>& q) {
    const size_t u = q[0], v = q[1], x = q[2], y = q[3];
    const Mat& Kuv = ops.K[u * n + v];
    const Mat lhs = ops.mix_first(ops.K, Kuv.column(x), y);
    const Mat rhs = ops.L[y * n + x] * Kuv - eps * (Kuv * ops.L[x * n + y]);
    return std::make_pair(lhs, rhs);
  };

  const size_t total = n * n * n * n;
  auto bad1 = first_violation(
      total,
      [&](size_t idx) {
        auto [lhs, rhs] = fk1_sides(decode4(idx, n));
        return lhs == rhs;
      },
      jobs);
  if (!bad1) {
    rep.add_pass("[L(u,v),L(x,y)] == L(uvx,y) + e L(x,vuy)");
  } else {
    auto q = decode4(*bad1, n);
    auto [lhs, rhs] = fk1_sides(q);
    rep.add_fail("[L(u,v),L(x,y)] == L(uvx,y) + e L(x,vuy)", {q, lhs.str(), rhs.str()});
  }

  auto bad2 = first_violation(
      total,
      [&](size_t idx) {
        auto [lhs, rhs] = fk2_sides(decode4(idx, n));
        return lhs == rhs;
      },
      jobs);
  if (!bad2) {
    rep.add_pass("K(K(u,v)x,y) == L(y,x)K(u,v) - e K(u,v)L(x,y)");
  } else {
    auto q = decode4(*bad2, n);
    auto [lhs, rhs] = fk2_sides(q);
    rep.add_fail("K(K(u,v)x,y) == L(y,x)K(u,v) - e K(u,v)L(x,y)", {q, lhs.str(), rhs.str()});
  }
  return rep;
}

bool is_left_unit(const TripleSystem& ts, const Vec& e) {
  if (e.dim() != ts.dim()) throw DimensionMismatch("unit dim differs from system dim");
  return ts.L(e, e).is_identity();
}

bool is_automorphism(const TripleSystem& ts, const Mat& s) {
  if (!s.is_square() || s.rows() != ts.dim())
    throw DimensionMismatch("morphism dim differs from system dim");
  inverse(s);  // automorphisms must be invertible; throws otherwise
  const TripleSystem lhs = ts.transform_output(s);
  const TripleSystem rhs =
      ts.transform_input(0, s).transform_input(1, s).transform_input(2, s);
  return lhs == rhs;
}

OperatorSpan k_span(const TripleSystem& ts, int delta) {
  OperatorSpan span(ts.dim());
  for (size_t i = 0; i < ts.dim(); ++i)
    for (size_t j = 0; j < ts.dim(); ++j) span.add(ts.K_basis(i, j, delta));
  return span;
}

bool check_special(const TripleSystem& ts, const SignPair& signs) {
  const size_t n = ts.dim();
  const Scalar ed = signs.eps() * signs.del();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Mat lhs = ts.K_basis(i, j, signs.delta);
      const Mat rhs = ed * ts.L_basis(j, i) - signs.eps() * ts.L_basis(i, j);
      if (lhs != rhs) return false;
    }
  return true;
}

bool check_unitary(const TripleSystem& ts, const SignPair& signs) {
  const bool unitary = k_span(ts, signs.delta).contains(Mat::identity(ts.dim()));
  if (unitary) {
    if (signs.epsilon != signs.delta)
      throw ConstructionError(
          "unitary system with eps != del: input violates the triple-system axioms");
    if (!check_special(ts, signs))
      throw ConstructionError(
          "unitary system that is not special: input violates the triple-system axioms");
  }
  return unitary;
}

}  // namespace kantor
