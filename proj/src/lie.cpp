#include "kantor/lie.hpp"

#include <sstream>

#include "kantor/bridge.hpp"
#include "kantor/errors.hpp"
#include "kantor/parallel.hpp"

namespace kantor {

GradedSuperalgebra::GradedSuperalgebra(std::vector<GradedElement> elems, std::string label)
    : elems_(std::move(elems)), label_(std::move(label)) {
  for (const auto& e : elems_)
    if (e.degree < -2 || e.degree > 2)
      throw InputError("graded element degree outside {-2..2}");
  b_.assign(elems_.size() * elems_.size() * elems_.size(), Scalar(0));
}

Vec GradedSuperalgebra::bracket_basis(size_t i, size_t j) const {
  Vec r(dim());
  for (size_t k = 0; k < dim(); ++k) r[k] = b(i, j, k);
  return r;
}

Vec GradedSuperalgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.dim() != dim() || y.dim() != dim())
    throw DimensionMismatch("bracket argument dims differ from algebra dim");
  Vec r(dim());
  for (size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      for (size_t k = 0; k < dim(); ++k) {
        if (!b(i, j, k).is_zero()) r[k] += c * b(i, j, k);
      }
    }
  }
  return r;
}

std::vector<size_t> GradedSuperalgebra::degree_indices(int d) const {
  std::vector<size_t> idx;
  for (size_t i = 0; i < dim(); ++i)
    if (elems_[i].degree == d) idx.push_back(i);
  return idx;
}

std::array<size_t, 5> GradedSuperalgebra::dims_by_degree() const {
  std::array<size_t, 5> dims{};
  for (const auto& e : elems_) ++dims[e.degree + 2];
  return dims;
}

bool GradedSuperalgebra::any_odd() const {
  for (const auto& e : elems_)
    if (e.odd) return true;
  return false;
}

bool operator==(const GradedSuperalgebra& a, const GradedSuperalgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (size_t i = 0; i < a.dim(); ++i) {
    if (a.elems_[i].degree != b.elems_[i].degree || a.elems_[i].odd != b.elems_[i].odd)
      return false;
  }
  return a.b_ == b.b_;
}

Report check_super_jacobi(const GradedSuperalgebra& g, int jobs) {
  Report rep;
  rep.subject = g.label().empty() ? "graded-algebra" : g.label();
  rep.suite = "super-jacobi";
  const size_t d = g.dim();

  // Sparse view of the bracket tensor.
  std::vector<std::vector<size_t>> nz(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k)
        if (!g.b(i, j, k).is_zero()) nz[i * d + j].push_back(k);

  auto sign = [&](size_t i, size_t j) {
    return (g.elem(i).odd && g.elem(j).odd) ? Scalar(-1) : Scalar(1);
  };

  {
    std::optional<Witness> w;
    for (size_t i = 0; i < d && !w; ++i)
      for (size_t j = 0; j < d && !w; ++j) {
        const Vec lhs = g.bracket_basis(i, j);
        const Vec rhs = -(sign(i, j) * g.bracket_basis(j, i));
        if (lhs != rhs) w = Witness{{i, j}, lhs.str(), rhs.str()};
      }
    rep.add_item("[x,y] == -(-1)^{|x||y|}[y,x]", !w, w);
  }

  // [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - (-1)^{|i||j|}[e_j,[e_i,e_k]] == 0
  auto jacobi_defect = [&](size_t i, size_t j, size_t k) {
    Vec acc(d);
    for (size_t m : nz[j * d + k])
      for (size_t l : nz[i * d + m]) acc[l] += g.b(j, k, m) * g.b(i, m, l);
    for (size_t m : nz[i * d + j])
      for (size_t l : nz[m * d + k]) acc[l] -= g.b(i, j, m) * g.b(m, k, l);
    const Scalar s = sign(i, j);
    for (size_t m : nz[i * d + k])
      for (size_t l : nz[j * d + m]) acc[l] -= s * g.b(i, k, m) * g.b(j, m, l);
    return acc;
  };
  auto bad = first_violation(
      d * d * d,
      [&](size_t idx) {
        const size_t k = idx % d, j = (idx / d) % d, i = idx / (d * d);
        return jacobi_defect(i, j, k).is_zero();
      },
      jobs);
  if (!bad) {
    rep.add_pass("[x,[y,z]] == [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]");
  } else {
    const size_t k = *bad % d, j = (*bad / d) % d, i = *bad / (d * d);
    rep.add_fail("[x,[y,z]] == [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]",
                 {{i, j, k}, jacobi_defect(i, j, k).str(), Vec(d).str()});
  }
  return rep;
}

Report check_grading(const GradedSuperalgebra& g) {
  Report rep;
  rep.subject = g.label().empty() ? "graded-algebra" : g.label();
  rep.suite = "grading";
  const size_t d = g.dim();

  {
    std::optional<Witness> w;
    for (size_t i = 0; i < d && !w; ++i)
      for (size_t j = 0; j < d && !w; ++j) {
        const int deg = g.elem(i).degree + g.elem(j).degree;
        for (size_t k = 0; k < d; ++k) {
          if (g.b(i, j, k).is_zero()) continue;
          if (deg < -2 || deg > 2 || g.elem(k).degree != deg) {
            w = Witness{{i, j, k}, g.b(i, j, k).str(), "0"};
            break;
          }
        }
      }
    rep.add_item("[g_i, g_j] inside g_{i+j}", !w, w);
  }
  {
    std::optional<Witness> w;
    for (size_t i = 0; i < d && !w; ++i)
      for (size_t j = 0; j < d && !w; ++j) {
        const bool par = g.elem(i).odd != g.elem(j).odd;
        for (size_t k = 0; k < d; ++k) {
          if (!g.b(i, j, k).is_zero() && g.elem(k).odd != par) {
            w = Witness{{i, j, k}, g.b(i, j, k).str(), "0"};
            break;
          }
        }
      }
    rep.add_item("parity additivity", !w, w);
  }
  if (g.any_odd()) {
    std::optional<Witness> w;
    for (size_t i = 0; i < d && !w; ++i) {
      const bool expect = (g.elem(i).degree % 2) != 0;
      if (g.elem(i).odd != expect)
        w = Witness{{i}, g.elem(i).odd ? "odd" : "even", expect ? "odd" : "even"};
    }
    rep.add_item("parity matches degree mod 2", !w, w);
  }
  return rep;
}

namespace {

Mat block_of(const Mat& m, size_t r0, size_t c0, size_t n) {
  Mat b(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) b.at(i, j) = m.at(r0 + i, c0 + j);
  return b;
}

void put_block(Mat& m, size_t r0, size_t c0, const Mat& b) {
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) m.at(r0 + i, c0 + j) = b.at(i, j);
}

std::vector<Scalar> concat_flat(const Mat& a, const Mat& b) {
  std::vector<Scalar> row = a.flatten();
  const std::vector<Scalar> second = b.flatten();
  row.insert(row.end(), second.begin(), second.end());
  return row;
}

// M(X,Y) for columns X=(a1;b1), Y=(a2;b2): the even operator
//   [ L(a1,b2) - d L(a2,b1)      d K(a1,a2)            ]
//   [ -e K(b1,b2)                e L(b2,a1) - e*d L(b1,a2) ]
Mat column_bracket_matrix(const TripleSystem& ts, const SignPair& signs, const Vec& x,
                          const Vec& y) {
  const size_t n = ts.dim();
  auto half = [&](const Vec& v, bool top) {
    Vec h(n);
    for (size_t i = 0; i < n; ++i) h[i] = v[top ? i : n + i];
    return h;
  };
  const Vec a1 = half(x, true), b1 = half(x, false);
  const Vec a2 = half(y, true), b2 = half(y, false);
  const Scalar e = signs.eps(), d = signs.del();
  Mat m(2 * n, 2 * n);
  put_block(m, 0, 0, ts.L(a1, b2) - d * ts.L(a2, b1));
  put_block(m, 0, n, d * ts.K(a1, a2, signs.delta));
  put_block(m, n, 0, -(e * ts.K(b1, b2, signs.delta)));
  put_block(m, n, n, e * ts.L(b2, a1) - e * d * ts.L(b1, a2));
  return m;
}

}  // namespace

std::pair<TripleSystem, bool> build_T_system(const TripleSystem& ts, const SignPair& signs) {
  Report ax = check_fkts(ts, signs);
  if (!ax.passed())
    throw HypothesisError("input fails its (eps,delta) axioms\n" + ax.str());
  const size_t n = ts.dim();
  TripleSystem cols(2 * n, "T(" + (ts.label().empty() ? "U" : ts.label()) + ")");
  for (size_t p = 0; p < 2 * n; ++p)
    for (size_t q = 0; q < 2 * n; ++q) {
      const Mat m =
          column_bracket_matrix(ts, signs, Vec::unit(2 * n, p), Vec::unit(2 * n, q));
      for (size_t r = 0; r < 2 * n; ++r) {
        const Vec img = m.column(r);
        for (size_t l = 0; l < 2 * n; ++l) cols.t(p, q, r, l) = img[l];
      }
    }
  return {cols, signs.delta == -1};
}

std::optional<Vec> LieBuild::coordinatize_matrix(const Mat& m) const {
  const size_t n = u_dim;
  const Mat a = block_of(m, 0, 0, n);
  const Mat p = block_of(m, 0, n, n);
  const Mat q = block_of(m, n, 0, n);
  const Mat bb = block_of(m, n, n, n);
  const auto cp = kspan.coordinates(p);
  const auto cq = kspan.coordinates(q);
  const auto cab = pair_span.coordinates(concat_flat(a, bb));
  if (!cp || !cq || !cab) return std::nullopt;
  Vec r(g.dim());
  for (size_t i = 0; i < cq->size(); ++i) r[offsets[0] + i] = (*cq)[i];
  for (size_t i = 0; i < cab->size(); ++i) r[offsets[2] + i] = (*cab)[i];
  for (size_t i = 0; i < cp->size(); ++i) r[offsets[4] + i] = (*cp)[i];
  return r;
}

Vec LieBuild::coordinatize_column(const Vec& c) const {
  const size_t n = u_dim;
  Vec r(g.dim());
  for (size_t i = 0; i < n; ++i) {
    r[offsets[3] + i] = c[i];      // top half lives in degree +1
    r[offsets[1] + i] = c[n + i];  // bottom half in degree -1
  }
  return r;
}

bool LieBuild::is_matrix_element(size_t i) const {
  const int deg = g.elem(i).degree;
  return deg == -2 || deg == 0 || deg == 2;
}

Mat LieBuild::ambient_matrix(size_t i) const {
  const size_t n = u_dim;
  const int deg = g.elem(i).degree;
  Mat m(2 * n, 2 * n);
  if (deg == -2) {
    put_block(m, n, 0, kspan.basis_op(i - offsets[0]));
  } else if (deg == 2) {
    put_block(m, 0, n, kspan.basis_op(i - offsets[4]));
  } else if (deg == 0) {
    const auto& row = pair_span.rows()[i - offsets[2]];
    const std::vector<Scalar> first(row.begin(), row.begin() + n * n);
    const std::vector<Scalar> second(row.begin() + n * n, row.end());
    put_block(m, 0, 0, Mat::unflatten(n, n, first));
    put_block(m, n, n, Mat::unflatten(n, n, second));
  } else {
    throw InputError("basis element is odd, not an ambient matrix");
  }
  return m;
}

Vec LieBuild::ambient_column(size_t i) const {
  const size_t n = u_dim;
  const int deg = g.elem(i).degree;
  Vec c(2 * n);
  if (deg == 1) c[i - offsets[3]] = 1;
  else if (deg == -1) c[n + (i - offsets[1])] = 1;
  else throw InputError("basis element is even, not an ambient column");
  return c;
}

Vec LieBuild::embed_g1(const Vec& u) const {
  if (u.dim() != u_dim) throw DimensionMismatch("vector dim differs from U dim");
  Vec r(g.dim());
  for (size_t i = 0; i < u_dim; ++i) r[offsets[3] + i] = u[i];
  return r;
}

Vec LieBuild::embed_gm1(const Vec& u) const {
  if (u.dim() != u_dim) throw DimensionMismatch("vector dim differs from U dim");
  Vec r(g.dim());
  for (size_t i = 0; i < u_dim; ++i) r[offsets[1] + i] = u[i];
  return r;
}

LieBuild build_gU(const TripleSystem& ts, const SignPair& signs) {
  Report ax = check_fkts(ts, signs);
  if (!ax.passed())
    throw HypothesisError("input fails its (eps,delta) axioms\n" + ax.str());
  const size_t n = ts.dim();

  LieBuild build;
  build.signs = signs;
  build.u_dim = n;
  build.kspan = OperatorSpan(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) build.kspan.add(ts.K_basis(i, j, signs.delta));
  build.pair_span = RowSpan(2 * n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      build.pair_span.insert(
          concat_flat(ts.L_basis(i, j), signs.eps() * ts.L_basis(j, i)));

  const size_t kdim = build.kspan.size();
  const size_t g0dim = build.pair_span.size();
  build.offsets = {0, kdim, kdim + n, kdim + n + g0dim, kdim + n + g0dim + n};

  std::vector<GradedElement> elems;
  const bool odd_cols = signs.delta == -1;
  for (size_t r = 0; r < kdim; ++r) elems.push_back({"F" + std::to_string(r), -2, false});
  for (size_t i = 0; i < n; ++i) elems.push_back({"Y" + std::to_string(i), -1, odd_cols});
  for (size_t r = 0; r < g0dim; ++r) elems.push_back({"H" + std::to_string(r), 0, false});
  for (size_t i = 0; i < n; ++i) elems.push_back({"X" + std::to_string(i), 1, odd_cols});
  for (size_t r = 0; r < kdim; ++r) elems.push_back({"E" + std::to_string(r), 2, false});

  build.g = GradedSuperalgebra(std::move(elems),
                               "g(" + (ts.label().empty() ? "U" : ts.label()) + ")");
  const size_t d = build.g.dim();

  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Vec coords(d);
      if (build.is_matrix_element(i) && build.is_matrix_element(j)) {
        const Mat mi = build.ambient_matrix(i);
        const Mat mj = build.ambient_matrix(j);
        const auto c = build.coordinatize_matrix(mi * mj - mj * mi);
        if (!c)
          throw ConstructionError("even bracket leaves the candidate span at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
        coords = *c;
      } else if (build.is_matrix_element(i)) {
        coords = build.coordinatize_column(build.ambient_matrix(i).apply(build.ambient_column(j)));
      } else if (build.is_matrix_element(j)) {
        coords = -build.coordinatize_column(
            build.ambient_matrix(j).apply(build.ambient_column(i)));
      } else {
        const Mat m = column_bracket_matrix(ts, signs, build.ambient_column(i),
                                            build.ambient_column(j));
        const auto c = build.coordinatize_matrix(m);
        if (!c)
          throw ConstructionError("column bracket leaves the candidate span at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
        coords = *c;
      }
      for (size_t k = 0; k < d; ++k) build.g.b(i, j, k) = coords[k];
    }

  Report jac = check_super_jacobi(build.g);
  if (!jac.passed()) throw ConstructionError("g(U) fails super-Jacobi\n" + jac.str());
  Report gr = check_grading(build.g);
  if (!gr.passed()) throw ConstructionError("g(U) fails its grading\n" + gr.str());
  return build;
}

PhiMap phi_of_gU(const LieBuild& build) {
  const size_t n = build.u_dim;
  const size_t d = build.g.dim();
  const Scalar med = -(build.signs.eps() * build.signs.del());

  // Columns: (a, b) -> (-eps*del b, a).
  Mat phi_cols(2 * n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    phi_cols.at(i, n + i) = med;
    phi_cols.at(n + i, i) = 1;
  }
  const Mat phi_cols_inv = inverse(phi_cols);

  Mat phi(d, d);
  for (size_t i = 0; i < d; ++i) {
    if (build.is_matrix_element(i)) {
      const auto c =
          build.coordinatize_matrix(phi_cols * build.ambient_matrix(i) * phi_cols_inv);
      if (!c) throw ConstructionError("phi image leaves the algebra");
      phi.set_column(i, *c);
    } else {
      phi.set_column(i, build.coordinatize_column(phi_cols.apply(build.ambient_column(i))));
    }
  }

  // Degree reversal.
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k) {
      if (!phi.at(k, i).is_zero() &&
          build.g.elem(k).degree != -build.g.elem(i).degree)
        throw ConstructionError("phi does not reverse the grading");
    }
  // Square: id when eps*del = -1, else the degree-sign map.
  {
    const Mat sq = phi * phi;
    Mat expect(d, d);
    for (size_t i = 0; i < d; ++i) {
      const int dg = build.g.elem(i).degree;
      expect.at(i, i) =
          (build.signs.epsilon * build.signs.delta == -1) ? Scalar(1)
          : (dg % 2 == 0 ? Scalar(1) : Scalar(-1));
    }
    if (sq != expect) throw ConstructionError("phi has the wrong square");
  }
  // Automorphism sweep.
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      const Vec lhs = phi.apply(build.g.bracket_basis(i, j));
      const Vec rhs = build.g.bracket(phi.column(i), phi.column(j));
      if (lhs != rhs) throw ConstructionError("phi fails its automorphism sweep");
    }
  return {phi};
}

TripleSystem recover_fkts(const GradedSuperalgebra& g, const PhiMap& phi,
                          const SignPair& signs) {
  Report gr = check_grading(g);
  if (!gr.passed()) throw HypothesisError("input is not consistently graded\n" + gr.str());
  Report jac = check_super_jacobi(g);
  if (!jac.passed()) throw HypothesisError("input fails super-Jacobi\n" + jac.str());
  const size_t d = g.dim();
  if (signs.delta == -1) {
    for (size_t i = 0; i < d; ++i)
      if (g.elem(i).odd != (g.elem(i).degree % 2 != 0))
        throw HypothesisError("delta = -1 needs parity == degree mod 2");
  } else {
    if (g.any_odd()) throw HypothesisError("delta = +1 needs an ordinary Lie algebra");
  }
  const Mat& p = phi.matrix;
  if (!p.is_square() || p.rows() != d)
    throw DimensionMismatch("phi dim differs from algebra dim");
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k)
      if (!p.at(k, i).is_zero() && g.elem(k).degree != -g.elem(i).degree)
        throw HypothesisError("phi does not reverse the grading");
  {
    const Mat sq = p * p;
    Mat expect(d, d);
    for (size_t i = 0; i < d; ++i)
      expect.at(i, i) = (signs.epsilon * signs.delta == -1)
                            ? Scalar(1)
                            : (g.elem(i).degree % 2 == 0 ? Scalar(1) : Scalar(-1));
    if (sq != expect) throw HypothesisError("phi has the wrong square for this signature");
  }
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      if (p.apply(g.bracket_basis(i, j)) != g.bracket(p.column(i), p.column(j)))
        throw HypothesisError("phi is not an automorphism");
    }

  const std::vector<size_t> u = g.degree_indices(1);
  const size_t nu = u.size();
  std::vector<size_t> u_pos(d, d);
  for (size_t a = 0; a < nu; ++a) u_pos[u[a]] = a;

  TripleSystem ts(nu, g.label().empty() ? "recovered" : g.label() + "-recovered");
  for (size_t a = 0; a < nu; ++a)
    for (size_t bidx = 0; bidx < nu; ++bidx) {
      const Vec w = g.bracket(Vec::unit(d, u[a]), p.column(u[bidx]));
      for (size_t c = 0; c < nu; ++c) {
        const Vec v = g.bracket(w, Vec::unit(d, u[c]));
        for (size_t k = 0; k < d; ++k) {
          if (v[k].is_zero()) continue;
          if (u_pos[k] == d)
            throw ConstructionError("recovered product leaves the degree-1 component");
          ts.t(a, bidx, c, u_pos[k]) = v[k];
        }
      }
    }

  // K(x,y)z == delta [[x,y], phi(z)], evaluated through the bracket.
  for (size_t a = 0; a < nu; ++a)
    for (size_t bidx = 0; bidx < nu; ++bidx) {
      const Vec xy = g.bracket(Vec::unit(d, u[a]), Vec::unit(d, u[bidx]));
      for (size_t c = 0; c < nu; ++c) {
        Vec lhs_u = ts.product_basis(a, c, bidx);
        {
          const Vec other = ts.product_basis(bidx, c, a);
          for (size_t q = 0; q < nu; ++q) lhs_u[q] -= signs.del() * other[q];
        }
        const Vec rhs = signs.del() * g.bracket(xy, p.column(u[c]));
        Vec rhs_u(nu);
        for (size_t k = 0; k < d; ++k) {
          if (rhs[k].is_zero()) continue;
          if (u_pos[k] == d)
            throw ConstructionError("K image leaves the degree-1 component");
          rhs_u[u_pos[k]] = rhs[k];
        }
        if (lhs_u != rhs_u)
          throw ConstructionError("K(x,y)z != delta [[x,y],phi(z)] in the recovered system");
      }
    }

  Report ax = check_fkts(ts, signs);
  if (!ax.passed())
    throw ConstructionError("recovered system fails the (eps,delta) axioms\n" + ax.str());
  return ts;
}

namespace {

Mat mat3(std::initializer_list<long> entries) {
  Mat m(3, 3);
  size_t i = 0;
  for (long v : entries) {
    m.at(i / 3, i % 3) = Scalar(v);
    ++i;
  }
  return m;
}

// Supercommutator in gl(1|2): [A,B] = AB - (-1)^{|A||B|} BA.
Mat supercomm(const Mat& a, bool a_odd, const Mat& b, bool b_odd) {
  Mat r = a * b;
  if (a_odd && b_odd)
    r += b * a;
  else
    r -= b * a;
  return r;
}

}  // namespace

Osp12Model osp12_model() {
  Osp12Model m;
  m.H = mat3({0, 0, 0, 0, 1, 0, 0, 0, -1});
  m.E = mat3({0, 0, 0, 0, 0, 1, 0, 0, 0});
  m.F = mat3({0, 0, 0, 0, 0, 0, 0, 1, 0});
  m.X = mat3({0, 0, -1, 1, 0, 0, 0, 0, 0});
  m.Y = mat3({0, 1, 0, 0, 0, 0, 1, 0, 0});
  m.H_hat = mat3({2, 0, 0, 0, 1, 0, 0, 0, 1});
  m.X_hat = mat3({0, 0, 1, 1, 0, 0, 0, 0, 0});
  m.Y_hat = mat3({0, -1, 0, 0, 0, 0, 1, 0, 0});
  m.conjugator = mat3({1, 0, 0, 0, 0, -1, 0, 1, 0});

  const Mat basis[5] = {m.F, m.Y, m.H, m.X, m.E};
  const bool odd[5] = {false, true, false, true, false};
  const int degree[5] = {-2, -1, 0, 1, 2};
  const char* labels[5] = {"F", "Y", "H", "X", "E"};

  RowSpan span(9);
  for (const auto& bm : basis) span.insert(bm.flatten());
  if (span.size() != 5) throw ConstructionError("osp(1,2) basis is not independent");

  std::vector<GradedElement> elems;
  for (size_t i = 0; i < 5; ++i) elems.push_back({labels[i], degree[i], odd[i]});
  m.g = GradedSuperalgebra(std::move(elems), "osp12");
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) {
      const auto c = span.coordinates(supercomm(basis[i], odd[i], basis[j], odd[j]).flatten());
      if (!c) throw ConstructionError("osp(1,2) bracket leaves the span");
      for (size_t k = 0; k < 5; ++k) m.g.b(i, j, k) = (*c)[k];
    }

  const Mat conj_inv = inverse(m.conjugator);
  Mat phi(5, 5);
  for (size_t i = 0; i < 5; ++i) {
    const auto c = span.coordinates((m.conjugator * basis[i] * conj_inv).flatten());
    if (!c) throw ConstructionError("conjugation leaves the osp(1,2) span");
    phi.set_column(i, Vec(*c));
  }
  m.phi = {phi};

  if (m.conjugator * m.X * conj_inv != m.Y)
    throw ConstructionError("conjugation does not send X to Y");
  if (m.conjugator * m.X_hat * conj_inv != m.Y_hat)
    throw ConstructionError("conjugation does not send X-hat to Y-hat");

  // The natural module is invariant under the supercommutator action.
  const Mat module[3] = {m.H_hat, m.X_hat, m.Y_hat};
  const bool module_odd[3] = {false, true, true};
  RowSpan module_span(9);
  for (const auto& s : module) module_span.insert(s.flatten());
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 3; ++j) {
      if (!module_span.contains(
              supercomm(basis[i], odd[i], module[j], module_odd[j]).flatten()))
        throw ConstructionError("osp(1,2) action leaves the natural module");
    }

  Report jac = check_super_jacobi(m.g);
  Report gr = check_grading(m.g);
  if (!jac.passed() || !gr.passed())
    throw ConstructionError("osp(1,2) model failed its own checks");
  return m;
}

namespace {

void require_degree_support(const GradedSuperalgebra& g, const Vec& v, int degree,
                            const char* what) {
  for (size_t i = 0; i < g.dim(); ++i)
    if (!v[i].is_zero() && g.elem(i).degree != degree)
      throw InputError(std::string(what) + " is not supported on the degree " +
                       std::to_string(degree) + " component");
}

}  // namespace

bool b01_left_unit_check(const GradedSuperalgebra& g, const PhiMap& phi, const Vec& e) {
  if (e.dim() != g.dim()) throw DimensionMismatch("element dim differs from algebra dim");
  require_degree_support(g, e, 1, "candidate unit");
  const std::vector<size_t> u = g.degree_indices(1);
  const Vec phi_e = phi.matrix.apply(e);
  const Vec he = g.bracket(e, phi_e);
  for (size_t a : u) {
    const Vec z = Vec::unit(g.dim(), a);
    if (g.bracket(he, z) != z) return false;
  }
  const Vec ee = g.bracket(e, e);
  for (size_t a : u) {
    const Vec z = Vec::unit(g.dim(), a);
    Vec lhs = -g.bracket(ee, phi.matrix.apply(z));
    if (lhs != Scalar(2) * z) return false;
  }
  return true;
}

B01Decomposition b01_decompose(const GradedSuperalgebra& g, const PhiMap& phi, const Vec& e) {
  const size_t d = g.dim();
  if (!g.any_odd())
    throw HypothesisError("decomposition needs a Lie superalgebra (delta = -1)");
  {
    Report gr = check_grading(g);
    if (!gr.passed())
      throw HypothesisError("input is not consistently graded\n" + gr.str());
  }
  if (!b01_left_unit_check(g, phi, e))
    throw HypothesisError(
        "e is not a normalized left unit: need L(e,e) = id and K(e,e) = 2 id");

  B01Decomposition out;
  out.report.subject = g.label().empty() ? "graded-algebra" : g.label();
  out.report.suite = "b01-decompose";

  const std::vector<size_t> u = g.degree_indices(1);
  const size_t nu = u.size();
  const Vec phi_e = phi.matrix.apply(e);

  auto embed = [&](const Vec& coords) {
    Vec r(d);
    for (size_t a = 0; a < nu; ++a) r[u[a]] = coords[a];
    return r;
  };
  auto restrict_u = [&](const Vec& v) {
    Vec r(nu);
    for (size_t a = 0; a < nu; ++a) r[a] = v[u[a]];
    return r;
  };

  // rho(x) = xee = [[x, phi(e)], e] on the degree-1 component.
  Mat rho(nu, nu);
  for (size_t a = 0; a < nu; ++a) {
    const Vec x = Vec::unit(d, u[a]);
    rho.set_column(a, restrict_u(g.bracket(g.bracket(x, phi_e), e)));
  }
  if (!(rho * rho).is_identity())
    throw HypothesisError("rho^2 != id on the degree-1 component");
  auto [p1, pm1] = eigenprojections(rho, Scalar(1), Scalar(-1));
  auto column_basis = [&](const Mat& p) {
    RowSpan span(nu);
    for (size_t j = 0; j < nu; ++j) span.insert(p.column(j).entries());
    std::vector<Vec> basis;
    for (const auto& row : span.rows()) basis.emplace_back(row);
    return basis;
  };
  const std::vector<Vec> u1 = column_basis(p1);
  const std::vector<Vec> um1 = column_basis(pm1);

  // h = span{F, Y, H, X, E} built from e alone.
  const Vec Hh = g.bracket(e, phi_e);
  Vec Eh = g.bracket(e, e);
  Eh *= Scalar(-1, 2);
  Vec Fh = g.bracket(phi_e, phi_e);
  Fh *= Scalar(1, 2);
  out.h = {Fh, phi_e, Hh, e, Eh};

  {
    const Osp12Model osp = osp12_model();
    bool ok = true;
    for (size_t a = 0; a < 5 && ok; ++a)
      for (size_t b = 0; b < 5 && ok; ++b) {
        Vec expect(d);
        for (size_t c = 0; c < 5; ++c) {
          if (!osp.g.b(a, b, c).is_zero()) expect += osp.g.b(a, b, c) * out.h[c];
        }
        ok = g.bracket(out.h[a], out.h[b]) == expect;
      }
    out.report.add_item("h closes with the osp(1,2) structure constants", ok, std::nullopt);
    if (!ok) return out;
  }

  RowSpan all(d);
  auto add_vec = [&](RowSpan& span, const Vec& v) { span.insert(v.entries()); };

  auto process = [&](const Vec& x_u, bool expect_adjoint) {
    const Vec x = embed(x_u);
    const Vec px = phi.matrix.apply(x);
    const std::vector<Vec> gens = {g.bracket(phi_e, px), px, g.bracket(e, px), x,
                                   g.bracket(e, x)};
    RowSpan span(d);
    for (const auto& v : gens) add_vec(span, v);
    bool ok = span.size() == (expect_adjoint ? 5u : 3u);
    if (!expect_adjoint)
      ok = ok && g.bracket(e, x).is_zero() && g.bracket(phi_e, px).is_zero();
    for (const auto& hv : out.h)
      for (const auto& gv : gens)
        ok = ok && span.contains(g.bracket(hv, gv).entries());
    for (const auto& row : span.rows()) all.insert(row);
    return ok;
  };

  bool adjoint_ok = true;
  for (const auto& x : u1) {
    adjoint_ok = adjoint_ok && process(x, true);
    out.adjoint_gens.push_back(embed(x));
  }
  out.report.add_item("each U_1 module is a 5-dim h-invariant adjoint copy", adjoint_ok,
                      std::nullopt);
  bool natural_ok = true;
  bool ke_zero = true;
  for (const auto& x : um1) {
    natural_ok = natural_ok && process(x, false);
    ke_zero = ke_zero && g.bracket(e, embed(x)).is_zero();
    out.natural_gens.push_back(embed(x));
  }
  out.report.add_item("each U_{-1} module is a 3-dim h-invariant natural copy", natural_ok,
                      std::nullopt);
  out.report.add_item("K(e,x) == 0 for x in U_{-1}", ke_zero, std::nullopt);

  // Trivial part: elements of g_0 killed by all of h.
  const std::vector<size_t> g0 = g.degree_indices(0);
  Mat centralizer(5 * d, g0.size());
  for (size_t col = 0; col < g0.size(); ++col) {
    const Vec z = Vec::unit(d, g0[col]);
    for (size_t a = 0; a < 5; ++a) {
      const Vec img = g.bracket(z, out.h[a]);
      for (size_t r = 0; r < d; ++r) centralizer.at(a * d + r, col) = img[r];
    }
  }
  for (const auto& kv : nullspace(centralizer)) {
    Vec t(d);
    for (size_t col = 0; col < g0.size(); ++col) t[g0[col]] = kv[col];
    all.insert(t.entries());
    out.trivial_basis.push_back(std::move(t));
  }

  out.adjoint_count = u1.size();
  out.natural_count = um1.size();
  out.trivial_dim = out.trivial_basis.size();

  const bool dims_ok =
      5 * out.adjoint_count + 3 * out.natural_count + out.trivial_dim == d &&
      all.size() == d;
  std::optional<Witness> w;
  if (!dims_ok)
    w = Witness{{out.adjoint_count, out.natural_count, out.trivial_dim},
                std::to_string(5 * out.adjoint_count + 3 * out.natural_count +
                               out.trivial_dim) + " (span " + std::to_string(all.size()) + ")",
                std::to_string(d)};
  out.report.add_item("5a + 3b + dim(trivial) == dim g and modules span g", dims_ok, w);
  return out;
}

Report check_twist_isomorphism(const TripleSystem& ts, const Mat& s, const SignPair& signs) {
  Report rep;
  rep.subject = ts.label().empty() ? "triple-system" : ts.label();
  rep.suite = "twist-isomorphism";

  TwistResult tw = twist(ts, s, signs);
  const LieBuild g1 = build_gU(ts, signs);
  const LieBuild g2 = build_gU(tw.system, tw.signs);

  const bool dims_ok = g1.g.dims_by_degree() == g2.g.dims_by_degree();
  rep.add_item("component dimensions match", dims_ok, std::nullopt);
  if (!dims_ok) return rep;

  const size_t n = ts.dim();
  const size_t d = g1.g.dim();
  Mat dmap(2 * n, 2 * n);  // diag(id, S)
  for (size_t i = 0; i < n; ++i) {
    dmap.at(i, i) = 1;
    for (size_t j = 0; j < n; ++j) dmap.at(n + i, n + j) = s.at(i, j);
  }
  const Mat dmap_inv = inverse(dmap);

  Mat psi(d, d);
  bool mapped = true;
  for (size_t i = 0; i < d && mapped; ++i) {
    if (g1.is_matrix_element(i)) {
      const auto c = g2.coordinatize_matrix(dmap * g1.ambient_matrix(i) * dmap_inv);
      if (!c) mapped = false;
      else psi.set_column(i, *c);
    } else {
      psi.set_column(i, g2.coordinatize_column(dmap.apply(g1.ambient_column(i))));
    }
  }
  rep.add_item("induced map lands in the twisted algebra", mapped, std::nullopt);
  if (!mapped) return rep;

  std::optional<Witness> w;
  for (size_t i = 0; i < d && !w; ++i)
    for (size_t j = 0; j < d && !w; ++j) {
      const Vec lhs = psi.apply(g1.g.bracket_basis(i, j));
      const Vec rhs = g2.g.bracket(psi.column(i), psi.column(j));
      if (lhs != rhs) w = Witness{{i, j}, lhs.str(), rhs.str()};
    }
  rep.add_item("brackets match under (a,b) -> (a, S(b))", !w, w);
  return rep;
}

}  // namespace kantor
