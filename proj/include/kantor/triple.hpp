#pragma once

#include <string>
#include <vector>

#include "kantor/linalg.hpp"
#include "kantor/report.hpp"
#include "kantor/scalar.hpp"

namespace kantor {

/// The (epsilon, delta) signature of a Freudenthal-Kantor triple system.
/// Kantor triple systems are exactly the (-1, 1) case.
struct SignPair {
  int epsilon = -1;
  int delta = 1;

  SignPair() = default;
  SignPair(int e, int d);

  Scalar eps() const { return Scalar(epsilon); }
  Scalar del() const { return Scalar(delta); }
  friend bool operator==(const SignPair& a, const SignPair& b) {
    return a.epsilon == b.epsilon && a.delta == b.delta;
  }
  std::string str() const;
};

/// Finite-dimensional triple system given by structure constants:
///   e_i e_j e_k = sum_l t(i,j,k,l) e_l.
/// Products of arbitrary vectors are trilinear tensor contractions.
class TripleSystem {
 public:
  TripleSystem() = default;
  explicit TripleSystem(size_t dim, std::string label = "");

  size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Scalar& t(size_t i, size_t j, size_t k, size_t l) {
    return t_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  const Scalar& t(size_t i, size_t j, size_t k, size_t l) const {
    return t_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }

  /// e_i e_j e_k as a vector.
  Vec product_basis(size_t i, size_t j, size_t k) const;
  Vec product(const Vec& x, const Vec& y, const Vec& z) const;

  /// L(x,y): z -> xyz.
  Mat L(const Vec& x, const Vec& y) const;
  Mat L_basis(size_t i, size_t j) const;

  /// K(x,y): z -> xzy - delta * yzx.
  Mat K(const Vec& x, const Vec& y, int delta) const;
  Mat K_basis(size_t i, size_t j, int delta) const;

  /// Tensor with input slot `slot` (0,1,2) precomposed with S: e.g. slot 1
  /// gives the system {x S(y) z}.
  TripleSystem transform_input(size_t slot, const Mat& s) const;
  /// Tensor with outputs mapped through S: (x,y,z) -> S(xyz).
  TripleSystem transform_output(const Mat& s) const;

  friend bool operator==(const TripleSystem& a, const TripleSystem& b) {
    return a.dim_ == b.dim_ && a.t_ == b.t_;
  }
  friend bool operator!=(const TripleSystem& a, const TripleSystem& b) { return !(a == b); }

 private:
  size_t dim_ = 0;
  std::vector<Scalar> t_;
  std::string label_;
};

/// Sweeps [L(u,v),L(x,y)] = L(L(u,v)x,y) - L(x,L(v,u)y) over basis
/// quadruples.  Failure is a report outcome, not an error.
Report check_gjts(const TripleSystem& ts, int jobs = 1);

/// Sweeps both defining identities of an (epsilon, delta) Freudenthal-Kantor
/// triple system over basis quadruples:
///   [L(u,v),L(x,y)] = L(uvx,y) + eps L(x,vuy)
///   K(K(u,v)x,y)    = L(y,x)K(u,v) - eps K(u,v)L(x,y)
Report check_fkts(const TripleSystem& ts, const SignPair& signs, int jobs = 1);

/// True iff L(e,e) = id exactly.
bool is_left_unit(const TripleSystem& ts, const Vec& e);

/// True iff S(xyz) = S(x)S(y)S(z) on all basis triples.  Throws on
/// singular S.
bool is_automorphism(const TripleSystem& ts, const Mat& s);

/// Span of all K(e_i, e_j).
OperatorSpan k_span(const TripleSystem& ts, int delta);

/// K(x,y) = eps*del*L(y,x) - eps*L(x,y) on all basis pairs.
bool check_special(const TripleSystem& ts, const SignPair& signs);

/// id lies in the span of the K operators.  As a cross-check this asserts
/// the implication unitary => (eps == del and special); a violation throws
/// ConstructionError since it contradicts the triple-system axioms.
bool check_unitary(const TripleSystem& ts, const SignPair& signs);

}  // namespace kantor
