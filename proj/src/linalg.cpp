#include "kantor/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "kantor/errors.hpp"

namespace kantor {

Vec Vec::unit(size_t dim, size_t i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

bool Vec::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Vec& Vec::operator+=(const Vec& o) {
  if (dim() != o.dim()) throw DimensionMismatch("vector dims differ");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (dim() != o.dim()) throw DimensionMismatch("vector dims differ");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& c) {
  for (auto& x : e_) x *= c;
  return *this;
}

Vec Vec::operator-() const {
  Vec r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

std::string Vec::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ", ";
    os << e_[i];
  }
  os << "]";
  return os.str();
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (v.dim() != cols_) throw DimensionMismatch("operator/vector dims differ");
  Vec r(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    Scalar acc;
    for (size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
    }
    r[i] = acc;
  }
  return r;
}

Vec Mat::column(size_t j) const {
  Vec r(rows_);
  for (size_t i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

void Mat::set_column(size_t j, const Vec& v) {
  if (v.dim() != rows_) throw DimensionMismatch("column dim differs");
  for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix dims differ");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix dims differ");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Mat& Mat::operator*=(const Scalar& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product dims differ");
  Mat r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& mik = at(i, k);
      if (mik.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += mik * o.at(k, j);
      }
    }
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (!is_square()) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

std::optional<Scalar> Mat::scalar_multiple_of_identity() const {
  if (!is_square() || rows_ == 0) return std::nullopt;
  const Scalar c = at(0, 0);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (i == j ? at(i, j) != c : !at(i, j).is_zero()) return std::nullopt;
    }
  return c;
}

Mat Mat::unflatten(size_t rows, size_t cols, const std::vector<Scalar>& flat) {
  if (flat.size() != rows * cols) throw DimensionMismatch("unflatten size mismatch");
  Mat m(rows, cols);
  m.a_ = flat;
  return m;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << "[";
    for (size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat operator*(const Mat& m, const Scalar& c) { return c * m; }

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const size_t n = m.rows();
  Mat a = m;
  Mat inv = Mat::identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw SingularOperatorError("matrix is singular");
    if (pivot != col) {
      for (size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Scalar d = a.at(col, col).inverse();
    for (size_t j = 0; j < n; ++j) {
      a.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      const Scalar f = a.at(i, col);
      for (size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

size_t rank(const Mat& m) {
  RowSpan span(m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    std::vector<Scalar> row(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    span.insert(std::move(row));
  }
  return span.size();
}

std::vector<Vec> nullspace(const Mat& m) {
  RowSpan span(m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    std::vector<Scalar> row(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    span.insert(std::move(row));
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : span.pivots()) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (size_t r = 0; r < span.size(); ++r) v[span.pivots()[r]] = -span.rows()[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat poly_on_operator(const Mat& m, const std::vector<Scalar>& coeffs) {
  if (!m.is_square()) throw DimensionMismatch("operator polynomial of non-square matrix");
  const size_t n = m.rows();
  Mat acc(n, n);
  // Horner from the top coefficient.
  for (size_t idx = coeffs.size(); idx-- > 0;) {
    acc = acc * m;
    Mat term = Mat::identity(n);
    term *= coeffs[idx];
    acc += term;
  }
  return acc;
}

std::pair<Mat, Mat> eigenprojections(const Mat& m, const Scalar& r1, const Scalar& r2) {
  if (!m.is_square()) throw DimensionMismatch("eigenprojections of non-square matrix");
  if (r1 == r2) throw HypothesisError("eigenprojection roots coincide");
  const Mat check = poly_on_operator(m, {r1 * r2, -(r1 + r2), Scalar(1)});
  if (!check.is_zero())
    throw HypothesisError("operator is not annihilated by (M - r1)(M - r2)");
  const size_t n = m.rows();
  Mat p1 = m;
  Mat shift = Mat::identity(n);
  shift *= r2;
  p1 -= shift;
  p1 *= (r1 - r2).inverse();
  Mat p2 = Mat::identity(n);
  p2 -= p1;
  return {p1, p2};
}

void RowSpan::reduce(std::vector<Scalar>& row, std::vector<Scalar>* coords) const {
  if (coords) coords->assign(rows_.size(), Scalar(0));
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = row[pivots_[r]];
    if (c.is_zero()) continue;
    if (coords) (*coords)[r] = c;
    for (size_t j = pivots_[r]; j < width_; ++j) {
      if (!rows_[r][j].is_zero()) row[j] -= c * rows_[r][j];
    }
  }
}

bool RowSpan::insert(std::vector<Scalar> row) {
  if (row.size() != width_) throw DimensionMismatch("row width differs from span width");
  reduce(row, nullptr);
  size_t piv = 0;
  while (piv < width_ && row[piv].is_zero()) ++piv;
  if (piv == width_) return false;
  const Scalar d = row[piv].inverse();
  for (size_t j = piv; j < width_; ++j) row[j] *= d;
  // Eliminate the new pivot from existing rows, keeping full RREF.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = rows_[r][piv];
    if (c.is_zero()) continue;
    for (size_t j = piv; j < width_; ++j) rows_[r][j] -= c * row[j];
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(row));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

bool RowSpan::contains(std::vector<Scalar> row) const {
  if (row.size() != width_) throw DimensionMismatch("row width differs from span width");
  reduce(row, nullptr);
  return std::all_of(row.begin(), row.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::optional<std::vector<Scalar>> RowSpan::coordinates(std::vector<Scalar> row) const {
  if (row.size() != width_) throw DimensionMismatch("row width differs from span width");
  std::vector<Scalar> coords;
  reduce(row, &coords);
  for (const auto& x : row)
    if (!x.is_zero()) return std::nullopt;
  return coords;
}

void OperatorSpan::add(const Mat& m) {
  if (!m.is_square() || m.rows() != op_dim_)
    throw DimensionMismatch("operator dimension differs from span dimension");
  span_.insert(m.flatten());
}

bool OperatorSpan::contains(const Mat& m) const {
  if (!m.is_square() || m.rows() != op_dim_)
    throw DimensionMismatch("operator dimension differs from span dimension");
  return span_.contains(m.flatten());
}

std::optional<std::vector<Scalar>> OperatorSpan::coordinates(const Mat& m) const {
  if (!m.is_square() || m.rows() != op_dim_)
    throw DimensionMismatch("operator dimension differs from span dimension");
  return span_.coordinates(m.flatten());
}

Mat OperatorSpan::basis_op(size_t i) const {
  return Mat::unflatten(op_dim_, op_dim_, span_.rows().at(i));
}

OperatorSpan span_basis(const std::vector<Mat>& generators) {
  if (generators.empty()) throw InputError("span_basis needs at least one generator");
  const size_t n = generators.front().rows();
  for (const auto& g : generators)
    if (!g.is_square() || g.rows() != n)
      throw DimensionMismatch("span_basis generators have mixed dimensions");
  OperatorSpan span(n);
  for (const auto& g : generators) span.add(g);
  return span;
}

}  // namespace kantor
