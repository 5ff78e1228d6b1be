#include "kantor/corpus.hpp"

namespace kantor {

namespace {

struct ProductBuilder {
  size_t n;
  std::vector<Scalar> c;
  explicit ProductBuilder(size_t dim) : n(dim), c(dim * dim * dim) {}
  void set(size_t i, size_t j, size_t k, long v) { c[(i * n + j) * n + k] = Scalar(v); }
};

}  // namespace

InvolutiveAlgebra make_unit_field() {
  ProductBuilder b(1);
  b.set(0, 0, 0, 1);
  return InvolutiveAlgebra(1, std::move(b.c), Mat::identity(1), Vec::unit(1, 0), "unit-field");
}

InvolutiveAlgebra make_split_pair() {
  ProductBuilder b(2);
  b.set(0, 0, 0, 1);
  b.set(1, 1, 1, 1);
  Vec unit(2);
  unit[0] = 1;
  unit[1] = 1;
  return InvolutiveAlgebra(2, std::move(b.c), swap_map(), unit, "split-pair");
}

InvolutiveAlgebra make_quat() {
  // Basis (1, i, j, k): i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
  ProductBuilder b(4);
  const int tbl[4][4][2] = {
      // {target index, sign}
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},    // 1 * x
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},  // i * x
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},  // j * x
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},  // k * x
  };
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) b.set(i, j, tbl[i][j][0], tbl[i][j][1]);
  Mat inv = Mat::identity(4);
  for (size_t i = 1; i < 4; ++i) inv.at(i, i) = Scalar(-1);
  return InvolutiveAlgebra(4, std::move(b.c), inv, Vec::unit(4, 0), "quat");
}

InvolutiveAlgebra make_mat2_transpose() {
  // Basis (E11, E12, E21, E22); E_ab E_cd = delta_bc E_ad.
  ProductBuilder b(4);
  auto idx = [](size_t a, size_t bb) { return a * 2 + bb; };
  for (size_t a = 0; a < 2; ++a)
    for (size_t bb = 0; bb < 2; ++bb)
      for (size_t cc = 0; cc < 2; ++cc)
        for (size_t d = 0; d < 2; ++d) {
          if (bb == cc) b.set(idx(a, bb), idx(cc, d), idx(a, d), 1);
        }
  Mat inv(4, 4);  // transpose swaps E12 and E21
  inv.at(0, 0) = 1;
  inv.at(1, 2) = 1;
  inv.at(2, 1) = 1;
  inv.at(3, 3) = 1;
  Vec unit(4);
  unit[0] = 1;
  unit[3] = 1;
  return InvolutiveAlgebra(4, std::move(b.c), inv, unit, "mat2-transpose");
}

Mat swap_map() {
  Mat s(2, 2);
  s.at(0, 1) = 1;
  s.at(1, 0) = 1;
  return s;
}

Mat quat_conj_i() {
  Mat s = Mat::identity(4);
  s.at(2, 2) = Scalar(-1);
  s.at(3, 3) = Scalar(-1);
  return s;
}

Mat mat2_conj_diag() {
  Mat s = Mat::identity(4);
  s.at(1, 1) = Scalar(-1);
  s.at(2, 2) = Scalar(-1);
  return s;
}

TripleSystem make_scalar_fkts() {
  TripleSystem ts(1, "scalar-fkts");
  ts.t(0, 0, 0, 0) = 1;
  return ts;
}

TripleSystem make_componentwise_pair() {
  TripleSystem ts(2, "componentwise-pair");
  ts.t(0, 0, 0, 0) = 1;
  ts.t(1, 1, 1, 1) = 1;
  return ts;
}

TripleSystem make_swap_fkts() {
  TripleSystem ts = make_componentwise_pair().transform_input(1, swap_map());
  ts.set_label("swap-fkts");
  return ts;
}

TripleSystem make_bilinear_form_system() {
  TripleSystem ts(2, "bilinear-form");
  for (size_t i = 0; i < 2; ++i)
    for (size_t k = 0; k < 2; ++k) ts.t(i, i, k, k) = 1;  // (e_i|e_j) = delta_ij
  return ts;
}

}  // namespace kantor
