#pragma once

#include <array>
#include <string>
#include <vector>

#include "kantor/linalg.hpp"
#include "kantor/report.hpp"
#include "kantor/triple.hpp"

namespace kantor {

struct GradedElement {
  std::string label;
  int degree = 0;  // in {-2..2}
  bool odd = false;
};

/// Finite-dimensional Z-graded Lie (super)algebra by structure constants:
///   [e_i, e_j] = sum_k b(i,j,k) e_k.
class GradedSuperalgebra {
 public:
  GradedSuperalgebra() = default;
  GradedSuperalgebra(std::vector<GradedElement> elems, std::string label = "");

  size_t dim() const { return elems_.size(); }
  const GradedElement& elem(size_t i) const { return elems_[i]; }
  const std::vector<GradedElement>& elements() const { return elems_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Scalar& b(size_t i, size_t j, size_t k) { return b_[(i * dim() + j) * dim() + k]; }
  const Scalar& b(size_t i, size_t j, size_t k) const {
    return b_[(i * dim() + j) * dim() + k];
  }

  Vec bracket_basis(size_t i, size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  std::vector<size_t> degree_indices(int d) const;
  /// Component dimensions for degrees -2,-1,0,1,2.
  std::array<size_t, 5> dims_by_degree() const;
  bool any_odd() const;

  /// Structural equality: degrees, parities and the bracket tensor
  /// (labels ignored).
  friend bool operator==(const GradedSuperalgebra& a, const GradedSuperalgebra& b);

 private:
  std::vector<GradedElement> elems_;
  std::vector<Scalar> b_;
  std::string label_;
};

/// Graded antisymmetry [x,y] = -(-1)^{|x||y|}[y,x] on basis pairs, and the
/// graded Jacobi identity
///   [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
/// over all basis triples.
Report check_super_jacobi(const GradedSuperalgebra& g, int jobs = 1);

/// Degree additivity ([g_i, g_j] inside g_{i+j}, zero when |i+j| > 2),
/// parity additivity, and (when any element is odd) parity == |degree| mod 2.
Report check_grading(const GradedSuperalgebra& g);

/// Degree-reversing automorphism on the graded space, as a matrix in the
/// basis of the algebra.
struct PhiMap {
  Mat matrix;
};

/// The 5-graded Lie (super)algebra g(U) of an (eps, delta) system, with the
/// embedding data needed to map ambient 2n x 2n matrices and 2n columns to
/// coordinates.  Basis order is by ascending degree with blocks
///   F* (K-span, low), Y* (columns (0;e_i)), H* (pairs diag(L(a,b), eps L(b,a))),
///   X* (columns (e_i;0)), E* (K-span, high);
/// the degree +-1 blocks follow the basis order of U, and the span blocks are
/// canonical reduced bases, so the output is reproducible.
struct LieBuild {
  GradedSuperalgebra g;
  SignPair signs;
  size_t u_dim = 0;
  OperatorSpan kspan{0};  // span of K(x,y) on U
  RowSpan pair_span{0};   // span of (L(a,b), eps L(b,a)) pairs, flattened
  std::array<size_t, 5> offsets{};  // block starts by degree -2..2

  /// Coordinates of an ambient even element [A, P; Q, B]; nullopt if some
  /// block leaves the corresponding span.
  std::optional<Vec> coordinatize_matrix(const Mat& m) const;
  Vec coordinatize_column(const Vec& c) const;
  /// Ambient realization of basis element i.
  Mat ambient_matrix(size_t i) const;
  Vec ambient_column(size_t i) const;
  bool is_matrix_element(size_t i) const;
  /// g-coordinates of a U vector placed in degree +1 or -1.
  Vec embed_g1(const Vec& u) const;
  Vec embed_gm1(const Vec& u) const;
};

/// The 2n-dimensional triple system on columns:
///   [XYZ] = M(X,Y) Z,
/// a Lie triple system for delta = 1 and an anti-Lie triple system for
/// delta = -1; also reports whether columns are odd (delta = -1).
std::pair<TripleSystem, bool> build_T_system(const TripleSystem& ts, const SignPair& signs);

/// Builds g(U) = L + T with its 5-grading and verifies super-Jacobi and
/// grading before returning.
LieBuild build_gU(const TripleSystem& ts, const SignPair& signs);

/// The degree-reversing automorphism determined on columns by
/// (x, y) -> (-eps*del*y, x), extended to the even part by conjugation.
/// Chosen among the two automorphisms +-Phi of the column space so that
/// xyz = [[x, Phi(y)], z] recovers the triple product exactly for every
/// signature (it matches the matrix-model conjugation for the super case).
/// Verified to be an automorphism with Phi(g_i) = g_{-i} and the correct
/// square before returning.
PhiMap phi_of_gU(const LieBuild& build);

/// Triple system on the degree-1 component of a 5-graded Lie (super)algebra
/// with a degree-reversing automorphism phi:
///   xyz = [[x, phi(y)], z].
/// Preconditions (consistent grading, Jacobi, phi invariants) are verified;
/// the result is checked against the (eps, delta) axioms and against
///   K(x,y)z = delta [[x,y], phi(z)].
TripleSystem recover_fkts(const GradedSuperalgebra& g, const PhiMap& phi,
                          const SignPair& signs);

/// The orthosymplectic model inside gl(1|2): basis matrices F, Y, H, X, E
/// (ascending degree), the natural-module matrices, and the conjugation
/// giving Phi.
struct Osp12Model {
  GradedSuperalgebra g;  // dims (1,1,1,1,1), parities (even,odd,even,odd,even)
  PhiMap phi;
  Mat F, Y, H, X, E;           // 3x3 matrices
  Mat H_hat, X_hat, Y_hat;     // natural module matrices
  Mat conjugator;              // Phi = conj by this matrix
};
Osp12Model osp12_model();

/// L(e,e) = id and K(e,e) = 2 id on the degree-1 component, computed through
/// the bracket:  L(e,e)z = [[e,phi(e)],z],  K(e,e)z = -[[e,e],phi(z)].
/// Throws InputError if e is not supported on the degree-1 component.
bool b01_left_unit_check(const GradedSuperalgebra& g, const PhiMap& phi, const Vec& e);

/// Decomposition of a (-1,-1)-type g with normalized unit e into the
/// osp(1,2) subalgebra h, adjoint modules (one per U_1 basis vector),
/// natural modules (one per U_{-1} basis vector) and the trivial part
/// { z in g_0 : [z, h] = 0 }.
struct B01Decomposition {
  size_t adjoint_count = 0;
  size_t natural_count = 0;
  size_t trivial_dim = 0;
  std::vector<Vec> h;             // (F, Y, H, X, E) as g-vectors
  std::vector<Vec> adjoint_gens;  // U_1 eigenbasis, as g-vectors in degree 1
  std::vector<Vec> natural_gens;  // U_{-1} eigenbasis
  std::vector<Vec> trivial_basis;
  Report report;
};
B01Decomposition b01_decompose(const GradedSuperalgebra& g, const PhiMap& phi, const Vec& e);

/// The map (a, b) -> (a, S(b)) carries g(T) onto g(twist-of-T-by-S):
/// verifies the induced change of basis matches the bracket tensors exactly.
Report check_twist_isomorphism(const TripleSystem& ts, const Mat& s, const SignPair& signs);

}  // namespace kantor
