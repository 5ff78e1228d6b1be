#include "kantor/structurable.hpp"

#include "kantor/errors.hpp"
#include "kantor/parallel.hpp"

namespace kantor {

InvolutiveAlgebra::InvolutiveAlgebra(size_t dim, std::vector<Scalar> product, Mat involution,
                                     Vec unit, std::string label)
    : dim_(dim),
      c_(std::move(product)),
      involution_(std::move(involution)),
      unit_(std::move(unit)),
      label_(std::move(label)) {
  if (c_.size() != dim * dim * dim) throw DimensionMismatch("product tensor size mismatch");
  if (!involution_.is_square() || involution_.rows() != dim)
    throw DimensionMismatch("involution dim differs from algebra dim");
  if (unit_.dim() != dim) throw DimensionMismatch("unit dim differs from algebra dim");

  for (size_t i = 0; i < dim; ++i) {
    const Vec ei = Vec::unit(dim, i);
    if (mul(unit_, ei) != ei || mul(ei, unit_) != ei)
      throw HypothesisError("unit is not two-sided");
  }
  if (!(involution_ * involution_).is_identity())
    throw HypothesisError("involution does not square to the identity");
  if (involution_.apply(unit_) != unit_) throw HypothesisError("involution moves the unit");
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      const Vec lhs = conj(mul_basis(i, j));
      const Vec rhs = mul(conj(Vec::unit(dim, j)), conj(Vec::unit(dim, i)));
      if (lhs != rhs)
        throw HypothesisError("involution is not an anti-homomorphism");
    }
}

Vec InvolutiveAlgebra::mul(const Vec& x, const Vec& y) const {
  if (x.dim() != dim_ || y.dim() != dim_)
    throw DimensionMismatch("product argument dims differ from algebra dim");
  Vec r(dim_);
  for (size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (size_t k = 0; k < dim_; ++k) {
        if (!c(i, j, k).is_zero()) r[k] += xy * c(i, j, k);
      }
    }
  }
  return r;
}

Vec InvolutiveAlgebra::mul_basis(size_t i, size_t j) const {
  Vec r(dim_);
  for (size_t k = 0; k < dim_; ++k) r[k] = c(i, j, k);
  return r;
}

Mat InvolutiveAlgebra::left_mult(const Vec& x) const {
  Mat m(dim_, dim_);
  for (size_t j = 0; j < dim_; ++j) m.set_column(j, mul(x, Vec::unit(dim_, j)));
  return m;
}

Vec associator(const InvolutiveAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
  return a.mul(a.mul(x, y), z) - a.mul(x, a.mul(y, z));
}

Mat V_op(const InvolutiveAlgebra& a, const Vec& x, const Vec& y) {
  const size_t n = a.dim();
  if (x.dim() != n || y.dim() != n)
    throw DimensionMismatch("V operator argument dims differ from algebra dim");
  const Vec xc = a.conj(x);
  const Vec yc = a.conj(y);
  const Vec xyc = a.mul(x, yc);
  Mat m(n, n);
  for (size_t k = 0; k < n; ++k) {
    const Vec ek = Vec::unit(n, k);
    m.set_column(k, a.mul(xyc, ek) + a.mul(a.mul(ek, yc), x) - a.mul(a.mul(ek, xc), y));
  }
  return m;
}

namespace {

std::vector<size_t> decode(size_t idx, size_t n, size_t arity) {
  std::vector<size_t> q(arity);
  for (size_t p = arity; p-- > 0;) {
    q[p] = idx % n;
    idx /= n;
  }
  return q;
}

}  // namespace

Report check_structurable(const InvolutiveAlgebra& a, int jobs) {
  Report rep;
  rep.subject = a.label().empty() ? "algebra" : a.label();
  rep.suite = "structurable";
  const size_t n = a.dim();

  auto str1_sides = [&](const std::vector<size_t>& q) {
    const Vec x = Vec::unit(n, q[0]);
    const Vec w = x - a.conj(x);
    const Vec y = Vec::unit(n, q[1]);
    const Vec z = Vec::unit(n, q[2]);
    return std::make_pair(associator(a, w, y, z), associator(a, y, -w, z));
  };
  auto bad1 = first_violation(
      n * n * n,
      [&](size_t idx) {
        auto [lhs, rhs] = str1_sides(decode(idx, n, 3));
        return lhs == rhs;
      },
      jobs);
  if (!bad1) {
    rep.add_pass("(x - conj x, y, z) == (y, conj x - x, z)");
  } else {
    auto q = decode(*bad1, n, 3);
    auto [lhs, rhs] = str1_sides(q);
    rep.add_fail("(x - conj x, y, z) == (y, conj x - x, z)", {q, lhs.str(), rhs.str()});
  }

  std::vector<Mat> vops;
  vops.reserve(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) vops.push_back(V_op(a, Vec::unit(n, i), Vec::unit(n, j)));
  auto vmix_first = [&](const Vec& w, size_t second) {
    Mat acc(n, n);
    for (size_t m = 0; m < n; ++m)
      if (!w[m].is_zero()) acc += w[m] * vops[m * n + second];
    return acc;
  };
  auto vmix_second = [&](size_t first, const Vec& w) {
    Mat acc(n, n);
    for (size_t m = 0; m < n; ++m)
      if (!w[m].is_zero()) acc += w[m] * vops[first * n + m];
    return acc;
  };
  auto str2_sides = [&](const std::vector<size_t>& q) {
    const size_t u = q[0], v = q[1], x = q[2], y = q[3];
    const Mat& Vuv = vops[u * n + v];
    const Mat& Vxy = vops[x * n + y];
    const Mat lhs = Vuv * Vxy - Vxy * Vuv;
    const Mat rhs = vmix_first(Vuv.column(x), y) - vmix_second(x, vops[v * n + u].column(y));
    return std::make_pair(lhs, rhs);
  };
  auto bad2 = first_violation(
      n * n * n * n,
      [&](size_t idx) {
        auto [lhs, rhs] = str2_sides(decode(idx, n, 4));
        return lhs == rhs;
      },
      jobs);
  if (!bad2) {
    rep.add_pass("[V(u,v),V(x,y)] == V(V(u,v)x,y) - V(x,V(v,u)y)");
  } else {
    auto q = decode(*bad2, n, 4);
    auto [lhs, rhs] = str2_sides(q);
    rep.add_fail("[V(u,v),V(x,y)] == V(V(u,v)x,y) - V(x,V(v,u)y)", {q, lhs.str(), rhs.str()});
  }
  return rep;
}

bool is_algebra_automorphism(const InvolutiveAlgebra& a, const Mat& s) {
  if (!s.is_square() || s.rows() != a.dim())
    throw DimensionMismatch("morphism dim differs from algebra dim");
  inverse(s);  // must be invertible
  if (s.apply(a.unit()) != a.unit()) return false;
  if (s * a.involution() != a.involution() * s) return false;
  const size_t n = a.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (s.apply(a.mul_basis(i, j)) != a.mul(s.column(i), s.column(j))) return false;
    }
  return true;
}

namespace {

void verify_left_unital_kantor(const TripleSystem& ts, const Vec& e, const char* what) {
  Report axioms = check_fkts(ts, SignPair(-1, 1));
  if (!axioms.passed())
    throw ConstructionError(std::string(what) + ": output fails the (-1,1) axioms\n" +
                            axioms.str());
  if (!is_left_unit(ts, e))
    throw ConstructionError(std::string(what) + ": unit fails eex = x");
}

// 2 xee + exe = 3x, i.e. 2 rho + mu = 3 id.  This holds for the untwisted
// system of a structurable algebra; a twist by sigma != id keeps only the
// left-unit property.
void verify_unital_pair_identity(const TripleSystem& ts, const Vec& e, const char* what) {
  const size_t n = ts.dim();
  Mat rho(n, n), mu(n, n);
  for (size_t i = 0; i < n; ++i) {
    const Vec ei = Vec::unit(n, i);
    rho.set_column(i, ts.product(ei, e, e));
    mu.set_column(i, ts.product(e, ei, e));
  }
  Mat three = Mat::identity(n);
  three *= Scalar(3);
  if (Scalar(2) * rho + mu != three)
    throw ConstructionError(std::string(what) + ": unit fails 2xee + exe = 3x");
}

}  // namespace

TripleSystem kts_from_structurable(const InvolutiveAlgebra& a) {
  Report rep = check_structurable(a);
  if (!rep.passed())
    throw HypothesisError("algebra is not structurable; refusing to build the triple system\n" +
                          rep.str());
  const size_t n = a.dim();
  TripleSystem ts(n, a.label().empty() ? "kts" : a.label() + "-kts");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Mat v = V_op(a, Vec::unit(n, i), Vec::unit(n, j));
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) ts.t(i, j, k, l) = v.at(l, k);
    }
  verify_left_unital_kantor(ts, a.unit(), "kts_from_structurable");
  verify_unital_pair_identity(ts, a.unit(), "kts_from_structurable");
  return ts;
}

TripleSystem twisted_kts(const InvolutiveAlgebra& a, const Mat& s) {
  if (!is_algebra_automorphism(a, s))
    throw HypothesisError("map is not an algebra automorphism compatible with the involution");
  if (!(s * s).is_identity()) throw HypothesisError("twisting map is not involutive");
  TripleSystem base = kts_from_structurable(a);
  TripleSystem ts = base.transform_input(1, s);
  ts.set_label(a.label().empty() ? "twisted-kts" : a.label() + "-kts-tw");
  verify_left_unital_kantor(ts, a.unit(), "twisted_kts");
  return ts;
}

std::pair<std::vector<Vec>, std::vector<Vec>> hermitian_skew_split(const InvolutiveAlgebra& a) {
  auto [p_plus, p_minus] = eigenprojections(a.involution(), Scalar(1), Scalar(-1));
  auto column_basis = [&](const Mat& p) {
    RowSpan span(a.dim());
    for (size_t j = 0; j < a.dim(); ++j) span.insert(p.column(j).entries());
    std::vector<Vec> basis;
    for (const auto& row : span.rows()) basis.emplace_back(row);
    return basis;
  };
  auto sym = column_basis(p_plus);
  auto skew = column_basis(p_minus);
  if (sym.size() + skew.size() != a.dim())
    throw ConstructionError("symmetric/skew split dimensions do not sum to the algebra dim");
  return {sym, skew};
}

}  // namespace kantor
