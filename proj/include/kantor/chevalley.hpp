#pragma once

#include <string>
#include <vector>

#include "kantor/lie.hpp"
#include "kantor/linalg.hpp"
#include "kantor/triple.hpp"

namespace kantor {

enum class SimpleType { A1, A2, A3, C2 };
SimpleType parse_simple_type(const std::string& name);
std::string simple_type_name(SimpleType type);

struct ChevalleyElement {
  std::string label;
  bool is_root = false;
  bool positive = false;
  std::vector<int> root;  // coordinates in the epsilon basis; empty for Cartan
};

/// Simple Lie algebra with an integral Chevalley basis
///   { x_alpha : alpha in Sigma } + { h_i },
/// built from a faithful matrix realization, so the bracket tensor has
/// integer structure constants and Jacobi holds by construction (it is
/// re-verified anyway).  Satisfies [x_alpha, x_{-alpha}] = h_alpha with
/// alpha(h_alpha) = 2 on every root, and the highest root rho has rho+alpha
/// outside the root system for positive alpha.
class ChevalleyAlgebra {
 public:
  ChevalleyAlgebra(std::vector<ChevalleyElement> elems, std::vector<Scalar> bracket,
                   size_t rank, size_t highest_root, std::string label);

  size_t dim() const { return elems_.size(); }
  size_t rank() const { return rank_; }
  const std::string& label() const { return label_; }
  const ChevalleyElement& elem(size_t i) const { return elems_[i]; }
  size_t highest_root_index() const { return highest_root_; }
  /// Index of x_{-alpha} for a root element.
  size_t negative_of(size_t i) const;

  const Scalar& b(size_t i, size_t j, size_t k) const {
    return b_[(i * dim() + j) * dim() + k];
  }
  Vec bracket_basis(size_t i, size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

 private:
  std::vector<ChevalleyElement> elems_;
  std::vector<Scalar> b_;
  size_t rank_;
  size_t highest_root_;
  std::string label_;
};

/// Catalog: A1 (degenerate grading), A2, A3, C2.
ChevalleyAlgebra chevalley_algebra(SimpleType type);

/// The 5-grading by the highest-root coroot:
///   g_{+-2} = F x_{+-rho},  g_{+-1} = root spaces with rho-pairing nonzero,
///   g_0 = Cartan + root spaces orthogonal to rho.
/// Also carries the skew form on g_1 defined by [u, v] = <u|v> x_rho.
struct HighestRootGrading {
  std::vector<int> degree;       // per basis element
  std::array<size_t, 5> dims{};  // by degree -2..2
  std::vector<size_t> g1;        // degree-1 element indices, basis order
  Mat form;                      // <.|.> on the g1 basis, alternating
  bool degenerate = false;       // g1 empty (type A1)
};
HighestRootGrading highest_root_grading(const ChevalleyAlgebra& alg);

/// Order-two automorphism with x_alpha -> -x_{-alpha} and h -> -h.
/// Verified by a full automorphism sweep; a failure would signal a
/// structure-constant sign error.
Mat chevalley_phi(const ChevalleyAlgebra& alg);

/// The Kantor triple system uvw = [[u, Phi(v)], w] on U = g_1, together
/// with sigma(z) = [x_rho, Phi(z)].  Verifies sigma^2 = -id,
/// K(u,v) = <u|v> sigma, sigma in K(U,U), and the (-1,1) axioms.
struct KantorOnG1 {
  TripleSystem system;
  Mat sigma;
  Mat form;
  std::vector<size_t> g1;
};
KantorOnG1 kantor_on_g1(const ChevalleyAlgebra& alg, const HighestRootGrading& grading,
                        const Mat& phi);

/// {uvw} = u sigma(v) w, a (1,1) system with K*(u,v) = -<u|v> id (balanced).
TripleSystem balanced_twist(const KantorOnG1& kantor);

/// (uvw) = {uvw} - 1/2 <u|v> w + 1/2 <u|w> v + 1/2 <v|w> u.
/// Verified symmetric in the first two arguments.
TripleSystem freudenthal_product(const TripleSystem& twisted, const Mat& form);

/// The algebra as an (all-even) graded algebra under the highest-root
/// grading, e.g. for serialization or recover_fkts.
GradedSuperalgebra to_graded(const ChevalleyAlgebra& alg, const HighestRootGrading& grading);

}  // namespace kantor
