#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kantor/scalar.hpp"

namespace kantor {

class Vec {
 public:
  Vec() = default;
  explicit Vec(size_t dim) : e_(dim) {}
  explicit Vec(std::vector<Scalar> entries) : e_(std::move(entries)) {}
  static Vec unit(size_t dim, size_t i);

  size_t dim() const { return e_.size(); }
  Scalar& operator[](size_t i) { return e_[i]; }
  const Scalar& operator[](size_t i) const { return e_[i]; }
  const std::vector<Scalar>& entries() const { return e_; }

  bool is_zero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& c);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& c, Vec v) { return v *= c; }
  Vec operator-() const;
  friend bool operator==(const Vec& a, const Vec& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  std::string str() const;  // "[a, b, c]"

 private:
  std::vector<Scalar> e_;
};

/// Dense matrix of exact rationals.  Linear operators use the column
/// convention: the operator applied to basis vector e_j is column j.
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Mat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Vec apply(const Vec& v) const;
  Vec column(size_t j) const;
  void set_column(size_t j, const Vec& v);

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& c);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Scalar& c, Mat m) { return m *= c; }
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }
  /// If M == c * id, returns c.
  std::optional<Scalar> scalar_multiple_of_identity() const;

  std::vector<Scalar> flatten() const { return a_; }
  static Mat unflatten(size_t rows, size_t cols, const std::vector<Scalar>& flat);

  std::string str() const;  // "[[a, b], [c, d]]"

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Mat operator*(const Mat& m, const Scalar& c);

/// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.
/// Throws SingularOperatorError if the matrix is singular.
Mat inverse(const Mat& m);

size_t rank(const Mat& m);

/// Basis of { x : M x = 0 }.
std::vector<Vec> nullspace(const Mat& m);

/// Sum of coeffs[i] * M^i, coefficients in ascending degree.
Mat poly_on_operator(const Mat& m, const std::vector<Scalar>& coeffs);

/// Complementary idempotents for an operator annihilated by
/// (M - r1)(M - r2) with r1 != r2:
///   P1 = (M - r2 id) / (r1 - r2),   P2 = id - P1.
/// Throws HypothesisError if the annihilating polynomial fails, and if
/// r1 == r2.
std::pair<Mat, Mat> eigenprojections(const Mat& m, const Scalar& r1, const Scalar& r2);

/// Row space kept in reduced row echelon form.  The RREF basis of a row
/// space is unique, so spans built from the same generators in any order
/// are identical — this is what makes serialized bases reproducible.
class RowSpan {
 public:
  explicit RowSpan(size_t width) : width_(width) {}

  /// Returns true if the row enlarged the span.
  bool insert(std::vector<Scalar> row);
  bool contains(std::vector<Scalar> row) const;
  /// Expansion coefficients with respect to the reduced basis rows, if the
  /// row lies in the span.
  std::optional<std::vector<Scalar>> coordinates(std::vector<Scalar> row) const;

  size_t size() const { return rows_.size(); }
  size_t width() const { return width_; }
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

 private:
  // Reduces `row` in place against the basis; fills `coords` if non-null.
  void reduce(std::vector<Scalar>& row, std::vector<Scalar>* coords) const;

  size_t width_;
  std::vector<std::vector<Scalar>> rows_;  // sorted by pivot column
  std::vector<size_t> pivots_;
};

/// Linear span of square operators on a fixed space, reduced to a canonical
/// (RREF of flattened matrices) basis.
class OperatorSpan {
 public:
  explicit OperatorSpan(size_t op_dim) : op_dim_(op_dim), span_(op_dim * op_dim) {}

  void add(const Mat& m);
  bool contains(const Mat& m) const;
  std::optional<std::vector<Scalar>> coordinates(const Mat& m) const;

  size_t size() const { return span_.size(); }
  size_t op_dim() const { return op_dim_; }
  Mat basis_op(size_t i) const;

 private:
  size_t op_dim_;
  RowSpan span_;
};

/// Builds the reduced span of the generators.  All generators must be square
/// and share one dimension.
OperatorSpan span_basis(const std::vector<Mat>& generators);

}  // namespace kantor
