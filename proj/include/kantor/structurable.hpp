#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kantor/linalg.hpp"
#include "kantor/report.hpp"
#include "kantor/triple.hpp"

namespace kantor {

/// Unital algebra with involution, by structure constants:
///   e_i . e_j = sum_k c(i,j,k) e_k.
/// Construction enforces the involution axioms (period two, fixes the unit,
/// anti-homomorphism) and that the unit is two-sided.
class InvolutiveAlgebra {
 public:
  InvolutiveAlgebra(size_t dim, std::vector<Scalar> product, Mat involution, Vec unit,
                    std::string label = "");

  size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const Mat& involution() const { return involution_; }
  const Vec& unit() const { return unit_; }

  const Scalar& c(size_t i, size_t j, size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  Vec mul(const Vec& x, const Vec& y) const;
  Vec mul_basis(size_t i, size_t j) const;
  Vec conj(const Vec& x) const { return involution_.apply(x); }
  /// Matrix of z -> x . z.
  Mat left_mult(const Vec& x) const;

  /// Equality of the algebraic data (label ignored).
  friend bool operator==(const InvolutiveAlgebra& a, const InvolutiveAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_ && a.involution_ == b.involution_ &&
           a.unit_ == b.unit_;
  }

 private:
  size_t dim_;
  std::vector<Scalar> c_;
  Mat involution_;
  Vec unit_;
  std::string label_;
};

/// (x,y,z) = (x.y).z - x.(y.z)
Vec associator(const InvolutiveAlgebra& a, const Vec& x, const Vec& y, const Vec& z);

/// V_{x,y}(z) = (x . conj(y)) . z + (z . conj(y)) . x - (z . conj(x)) . y
Mat V_op(const InvolutiveAlgebra& a, const Vec& x, const Vec& y);

/// Sweeps the two structurable-algebra identities:
///   (x - conj(x), y, z) = (y, conj(x) - x, z)                over basis triples,
///   [V_{u,v}, V_{x,y}] = V_{V_{u,v}x, y} - V_{x, V_{v,u}y}   over basis quadruples.
Report check_structurable(const InvolutiveAlgebra& a, int jobs = 1);

/// True iff S is an algebra automorphism commuting with the involution and
/// fixing the unit.
bool is_algebra_automorphism(const InvolutiveAlgebra& a, const Mat& s);

/// The triple system {xyz} = V_{x,y}(z).  Verifies post hoc that the result
/// is a (-1,1) Freudenthal-Kantor system whose unit satisfies eex = x and
/// 2xee + exe = 3x.
TripleSystem kts_from_structurable(const InvolutiveAlgebra& a);

/// The triple system {xyz} = V_{x,S(y)}(z) for an involutive automorphism S.
/// Checks the hypotheses on S, then verifies the output is a left-unital
/// (-1,1) system.
TripleSystem twisted_kts(const InvolutiveAlgebra& a, const Mat& s);

/// Bases of the +1 and -1 eigenspaces of the involution (symmetric and
/// skew-symmetric elements).
std::pair<std::vector<Vec>, std::vector<Vec>> hermitian_skew_split(const InvolutiveAlgebra& a);

}  // namespace kantor
