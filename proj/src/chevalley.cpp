#include "kantor/chevalley.hpp"

#include <sstream>

#include "kantor/bridge.hpp"
#include "kantor/errors.hpp"

namespace kantor {

SimpleType parse_simple_type(const std::string& name) {
  if (name == "A1") return SimpleType::A1;
  if (name == "A2") return SimpleType::A2;
  if (name == "A3") return SimpleType::A3;
  if (name == "C2") return SimpleType::C2;
  throw InputError("unsupported simple type '" + name + "' (catalog: A1, A2, A3, C2)");
}

std::string simple_type_name(SimpleType type) {
  switch (type) {
    case SimpleType::A1: return "A1";
    case SimpleType::A2: return "A2";
    case SimpleType::A3: return "A3";
    case SimpleType::C2: return "C2";
  }
  return "?";
}

ChevalleyAlgebra::ChevalleyAlgebra(std::vector<ChevalleyElement> elems,
                                   std::vector<Scalar> bracket, size_t rank,
                                   size_t highest_root, std::string label)
    : elems_(std::move(elems)),
      b_(std::move(bracket)),
      rank_(rank),
      highest_root_(highest_root),
      label_(std::move(label)) {}

size_t ChevalleyAlgebra::negative_of(size_t i) const {
  if (!elems_[i].is_root) throw InputError("element is not a root vector");
  std::vector<int> neg = elems_[i].root;
  for (int& c : neg) c = -c;
  for (size_t j = 0; j < dim(); ++j)
    if (elems_[j].is_root && elems_[j].root == neg) return j;
  throw ConstructionError("root system is not symmetric");
}

Vec ChevalleyAlgebra::bracket_basis(size_t i, size_t j) const {
  Vec r(dim());
  for (size_t k = 0; k < dim(); ++k) r[k] = b(i, j, k);
  return r;
}

Vec ChevalleyAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.dim() != dim() || y.dim() != dim())
    throw DimensionMismatch("bracket argument dims differ from algebra dim");
  Vec r(dim());
  for (size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      for (size_t k = 0; k < dim(); ++k)
        if (!b(i, j, k).is_zero()) r[k] += c * b(i, j, k);
    }
  }
  return r;
}

namespace {

std::string root_label(const std::vector<int>& root) {
  std::ostringstream os;
  os << "x[";
  for (size_t i = 0; i < root.size(); ++i) {
    if (i) os << ",";
    os << root[i];
  }
  os << "]";
  return os.str();
}

struct Realization {
  std::vector<ChevalleyElement> elems;
  std::vector<Mat> mats;
  size_t rank = 0;
  size_t highest_root = 0;

  void add_root(std::vector<int> root, bool positive, Mat m) {
    elems.push_back({root_label(root), true, positive, std::move(root)});
    mats.push_back(std::move(m));
  }
  void add_cartan(size_t idx, Mat m) {
    elems.push_back({"h" + std::to_string(idx + 1), false, false, {}});
    mats.push_back(std::move(m));
  }
};

Mat unit_mat(size_t n, size_t i, size_t j) {
  Mat m(n, n);
  m.at(i, j) = 1;
  return m;
}

// sl_{m} on the basis { E_ij : i != j } + { E_ii - E_{i+1,i+1} }.
Realization realize_sl(size_t m) {
  Realization r;
  r.rank = m - 1;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      std::vector<int> root(m, 0);
      root[i] = 1;
      root[j] = -1;
      r.add_root(std::move(root), i < j, unit_mat(m, i, j));
      if (i == 0 && j == m - 1) r.highest_root = r.elems.size() - 1;
    }
  for (size_t i = 0; i + 1 < m; ++i) {
    Mat h(m, m);
    h.at(i, i) = 1;
    h.at(i + 1, i + 1) = Scalar(-1);
    r.add_cartan(i, std::move(h));
  }
  return r;
}

// sp_4 with the split symplectic form, basis order (e1, e2, f1, f2).
Realization realize_sp4() {
  Realization r;
  r.rank = 2;
  const size_t m = 4;
  auto add = [&](std::vector<int> root, bool pos, const Mat& mat) {
    r.add_root(std::move(root), pos, mat);
  };
  add({1, -1}, true, unit_mat(m, 0, 1) - unit_mat(m, 3, 2));
  add({-1, 1}, false, unit_mat(m, 1, 0) - unit_mat(m, 2, 3));
  add({1, 1}, true, unit_mat(m, 0, 3) + unit_mat(m, 1, 2));
  add({-1, -1}, false, unit_mat(m, 3, 0) + unit_mat(m, 2, 1));
  add({2, 0}, true, unit_mat(m, 0, 2));
  r.highest_root = r.elems.size() - 1;
  add({-2, 0}, false, unit_mat(m, 2, 0));
  add({0, 2}, true, unit_mat(m, 1, 3));
  add({0, -2}, false, unit_mat(m, 3, 1));
  Mat h1(m, m);
  h1.at(0, 0) = 1;
  h1.at(1, 1) = Scalar(-1);
  h1.at(2, 2) = Scalar(-1);
  h1.at(3, 3) = 1;
  r.add_cartan(0, std::move(h1));
  Mat h2(m, m);
  h2.at(1, 1) = 1;
  h2.at(3, 3) = Scalar(-1);
  r.add_cartan(1, std::move(h2));
  return r;
}

}  // namespace

ChevalleyAlgebra chevalley_algebra(SimpleType type) {
  Realization real;
  switch (type) {
    case SimpleType::A1: real = realize_sl(2); break;
    case SimpleType::A2: real = realize_sl(3); break;
    case SimpleType::A3: real = realize_sl(4); break;
    case SimpleType::C2: real = realize_sp4(); break;
  }
  const size_t d = real.elems.size();
  const size_t flat = real.mats.front().rows() * real.mats.front().cols();

  RowSpan span(flat);
  for (const auto& m : real.mats)
    if (!span.insert(m.flatten()))
      throw ConstructionError("realization matrices are not independent");

  std::vector<Scalar> tensor(d * d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      const Mat comm = real.mats[i] * real.mats[j] - real.mats[j] * real.mats[i];
      const auto c = span.coordinates(comm.flatten());
      if (!c) throw ConstructionError("bracket leaves the realization span");
      for (size_t k = 0; k < d; ++k) tensor[(i * d + j) * d + k] = (*c)[k];
    }

  ChevalleyAlgebra alg(std::move(real.elems), std::move(tensor), real.rank,
                       real.highest_root, "chevalley-" + simple_type_name(type));

  // Jacobi, re-verified on the assembled tensor.
  {
    std::vector<GradedElement> tmp;
    for (size_t i = 0; i < d; ++i) tmp.push_back({alg.elem(i).label, 0, false});
    GradedSuperalgebra flatg(std::move(tmp), alg.label());
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < d; ++k) flatg.b(i, j, k) = alg.b(i, j, k);
    Report jac = check_super_jacobi(flatg);
    if (!jac.passed())
      throw ConstructionError("Chevalley bracket fails Jacobi\n" + jac.str());
  }

  // [x_a, x_{-a}] = h_a with a(h_a) = 2, for every root.
  for (size_t i = 0; i < d; ++i) {
    if (!alg.elem(i).is_root) continue;
    const Vec h = alg.bracket_basis(i, alg.negative_of(i));
    if (alg.bracket(h, Vec::unit(d, i)) != Scalar(2) * Vec::unit(d, i))
      throw ConstructionError("coroot normalization a(h_a) = 2 fails at " +
                              alg.elem(i).label);
  }
  // rho + a is never a root for positive a.
  for (size_t i = 0; i < d; ++i) {
    if (!alg.elem(i).is_root || !alg.elem(i).positive) continue;
    if (!alg.bracket_basis(alg.highest_root_index(), i).is_zero())
      throw ConstructionError("highest root is not highest: [x_rho, x_a] != 0 at " +
                              alg.elem(i).label);
  }
  return alg;
}

HighestRootGrading highest_root_grading(const ChevalleyAlgebra& alg) {
  const size_t d = alg.dim();
  const size_t rho = alg.highest_root_index();
  const Vec h_rho = alg.bracket_basis(rho, alg.negative_of(rho));

  HighestRootGrading g;
  g.degree.assign(d, 0);
  for (size_t i = 0; i < d; ++i) {
    if (!alg.elem(i).is_root) continue;
    const Vec img = alg.bracket(h_rho, Vec::unit(d, i));
    // [h_rho, x_a] = a(h_rho) x_a; extract the eigenvalue.
    Scalar lambda = img[i];
    Vec expect = Vec::unit(d, i);
    expect *= lambda;
    if (img != expect)
      throw ConstructionError("coroot action is not diagonal at " + alg.elem(i).label);
    int deg = 0;
    for (; deg <= 2; ++deg)
      if (lambda == Scalar(deg) || lambda == Scalar(-deg)) break;
    if (deg > 2 || (lambda != Scalar(deg) && lambda != Scalar(-deg)))
      throw ConstructionError("root pairing with the highest coroot is outside -2..2");
    g.degree[i] = lambda == Scalar(deg) ? deg : -deg;
  }
  for (size_t i = 0; i < d; ++i) ++g.dims[g.degree[i] + 2];
  for (size_t i = 0; i < d; ++i)
    if (g.degree[i] == 1) g.g1.push_back(i);
  g.degenerate = g.g1.empty();

  // Degree additivity of the bracket.
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      const int sum = g.degree[i] + g.degree[j];
      const Vec w = alg.bracket_basis(i, j);
      for (size_t k = 0; k < d; ++k)
        if (!w[k].is_zero() && (sum < -2 || sum > 2 || g.degree[k] != sum))
          throw ConstructionError("highest-root grading is not additive");
    }

  // <u|v> on g_1: [u, v] = <u|v> x_rho.
  const size_t nu = g.g1.size();
  g.form = Mat(nu, nu);
  for (size_t a = 0; a < nu; ++a)
    for (size_t b = 0; b < nu; ++b) {
      const Vec w = alg.bracket_basis(g.g1[a], g.g1[b]);
      for (size_t k = 0; k < d; ++k)
        if (!w[k].is_zero() && k != rho)
          throw ConstructionError("[g_1, g_1] is not contained in F x_rho");
      g.form.at(a, b) = w[rho];
    }
  if (g.form != -(g.form.transpose()))
    throw ConstructionError("the form on g_1 is not alternating");
  return g;
}

Mat chevalley_phi(const ChevalleyAlgebra& alg) {
  const size_t d = alg.dim();
  Mat phi(d, d);
  for (size_t i = 0; i < d; ++i) {
    if (alg.elem(i).is_root)
      phi.at(alg.negative_of(i), i) = Scalar(-1);
    else
      phi.at(i, i) = Scalar(-1);
  }
  if (!(phi * phi).is_identity()) throw ConstructionError("phi does not square to id");
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      if (phi.apply(alg.bracket_basis(i, j)) != alg.bracket(phi.column(i), phi.column(j)))
        throw ConstructionError(
            "phi fails its automorphism sweep: structure-constant sign error");
    }
  return phi;
}

KantorOnG1 kantor_on_g1(const ChevalleyAlgebra& alg, const HighestRootGrading& grading,
                        const Mat& phi) {
  if (grading.degenerate)
    throw HypothesisError("degenerate grading (g_1 = 0); no triple system on g_1");
  const size_t d = alg.dim();
  const size_t nu = grading.g1.size();
  std::vector<size_t> pos(d, d);
  for (size_t a = 0; a < nu; ++a) pos[grading.g1[a]] = a;

  auto restrict_u = [&](const Vec& v, const char* what) {
    Vec r(nu);
    for (size_t k = 0; k < d; ++k) {
      if (v[k].is_zero()) continue;
      if (pos[k] == d)
        throw ConstructionError(std::string(what) + " leaves the degree-1 component");
      r[pos[k]] = v[k];
    }
    return r;
  };

  KantorOnG1 out;
  out.g1 = grading.g1;
  out.form = grading.form;
  out.system = TripleSystem(nu, alg.label() + "-g1");
  for (size_t a = 0; a < nu; ++a)
    for (size_t b = 0; b < nu; ++b) {
      const Vec w = alg.bracket(Vec::unit(d, grading.g1[a]), phi.column(grading.g1[b]));
      for (size_t c = 0; c < nu; ++c) {
        const Vec v = restrict_u(alg.bracket(w, Vec::unit(d, grading.g1[c])), "uvw");
        for (size_t l = 0; l < nu; ++l) out.system.t(a, b, c, l) = v[l];
      }
    }

  out.sigma = Mat(nu, nu);
  for (size_t a = 0; a < nu; ++a) {
    const Vec img = alg.bracket(Vec::unit(d, alg.highest_root_index()),
                                phi.column(grading.g1[a]));
    out.sigma.set_column(a, restrict_u(img, "sigma"));
  }

  const Mat minus_id = -Mat::identity(nu);
  if (out.sigma * out.sigma != minus_id)
    throw ConstructionError("sigma^2 != -id on g_1");
  for (size_t a = 0; a < nu; ++a)
    for (size_t b = 0; b < nu; ++b) {
      if (out.system.K_basis(a, b, 1) != out.form.at(a, b) * out.sigma)
        throw ConstructionError("K(u,v) != <u|v> sigma on g_1");
    }
  if (!k_span(out.system, 1).contains(out.sigma))
    throw ConstructionError("sigma is not in the span of the K operators");
  Report ax = check_fkts(out.system, SignPair(-1, 1));
  if (!ax.passed())
    throw ConstructionError("g_1 system fails the (-1,1) axioms\n" + ax.str());
  return out;
}

TripleSystem balanced_twist(const KantorOnG1& kantor) {
  TwistResult tw = twist(kantor.system, kantor.sigma, SignPair(-1, 1));
  if (!(tw.signs == SignPair(1, 1)))
    throw ConstructionError("balanced twist did not produce a (1,1) system");
  const size_t nu = kantor.system.dim();
  for (size_t a = 0; a < nu; ++a)
    for (size_t b = 0; b < nu; ++b) {
      const Mat expect = -kantor.form.at(a, b) * Mat::identity(nu);
      if (tw.system.K_basis(a, b, 1) != expect)
        throw ConstructionError("K*(u,v) != -<u|v> id in the balanced twist");
    }
  TripleSystem out = std::move(tw.system);
  out.set_label(kantor.system.label() + "-balanced");
  return out;
}

TripleSystem freudenthal_product(const TripleSystem& twisted, const Mat& form) {
  const size_t n = twisted.dim();
  if (form.rows() != n || form.cols() != n)
    throw DimensionMismatch("form dim differs from system dim");
  TripleSystem out(n, twisted.label() + "-freudenthal");
  const Scalar half(1, 2);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) {
          Scalar v = twisted.t(i, j, k, l);
          if (l == k) v -= half * form.at(i, j);
          if (l == j) v += half * form.at(i, k);
          if (l == i) v += half * form.at(j, k);
          out.t(i, j, k, l) = v;
        }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l)
          if (out.t(i, j, k, l) != out.t(j, i, k, l))
            throw ConstructionError("Freudenthal product is not symmetric in u, v");
  return out;
}

GradedSuperalgebra to_graded(const ChevalleyAlgebra& alg, const HighestRootGrading& grading) {
  std::vector<GradedElement> elems;
  for (size_t i = 0; i < alg.dim(); ++i)
    elems.push_back({alg.elem(i).label, grading.degree[i], false});
  GradedSuperalgebra g(std::move(elems), alg.label());
  for (size_t i = 0; i < alg.dim(); ++i)
    for (size_t j = 0; j < alg.dim(); ++j)
      for (size_t k = 0; k < alg.dim(); ++k) g.b(i, j, k) = alg.b(i, j, k);
  return g;
}

}  // namespace kantor
