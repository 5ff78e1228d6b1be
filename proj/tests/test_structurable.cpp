#include "doctest.h"
#include "kantor/corpus.hpp"
#include "kantor/errors.hpp"
#include "kantor/structurable.hpp"

using namespace kantor;

namespace {

Vec vec(std::initializer_list<long> entries) {
  Vec v(entries.size());
  size_t i = 0;
  for (long e : entries) v[i++] = Scalar(e);
  return v;
}

}  // namespace

TEST_CASE("algebra construction enforces the involution axioms") {
  CHECK_NOTHROW(make_unit_field());
  CHECK_NOTHROW(make_split_pair());
  CHECK_NOTHROW(make_quat());
  CHECK_NOTHROW(make_mat2_transpose());

  // The identity is not an anti-homomorphism of a noncommutative algebra,
  // so quat with the trivial involution is rejected at construction.
  const InvolutiveAlgebra quat = make_quat();
  std::vector<Scalar> prod;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      for (size_t k = 0; k < 4; ++k) prod.push_back(quat.c(i, j, k));
  CHECK_THROWS_AS(InvolutiveAlgebra(4, prod, Mat::identity(4), vec({1, 0, 0, 0})),
                  HypothesisError);

  // A commutative example with the trivial involution is fine and passes
  // the structurable sweeps.
  std::vector<Scalar> pair_prod(8);
  pair_prod[0] = 1;                      // e0 e0 = e0
  pair_prod[(1 * 2 + 1) * 2 + 1] = 1;    // e1 e1 = e1
  const InvolutiveAlgebra pair_id(2, pair_prod, Mat::identity(2), vec({1, 1}));
  CHECK(check_structurable(pair_id).passed());
}

TEST_CASE("associator") {
  const InvolutiveAlgebra quat = make_quat();
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      for (size_t k = 0; k < 4; ++k)
        CHECK(associator(quat, Vec::unit(4, i), Vec::unit(4, j), Vec::unit(4, k)).is_zero());
  CHECK(associator(quat, vec({0, 1, 2, 0}), quat.unit(), vec({1, 0, 0, 5})).is_zero());
}

TEST_CASE("V operator") {
  const InvolutiveAlgebra quat = make_quat();
  CHECK(V_op(quat, quat.unit(), quat.unit()).is_identity());
  // V_{i,1}(1) = 2i - conj(i) = 3i.
  CHECK(V_op(quat, vec({0, 1, 0, 0}), quat.unit()).apply(quat.unit()) == vec({0, 3, 0, 0}));

  const InvolutiveAlgebra field = make_unit_field();
  CHECK(V_op(field, vec({2}), vec({3})) == Scalar(6) * Mat::identity(1));
}

TEST_CASE("the corpus algebras are structurable") {
  for (const auto& a :
       {make_unit_field(), make_split_pair(), make_quat(), make_mat2_transpose()}) {
    const Report rep = check_structurable(a);
    CHECK(rep.passed());
  }
}

TEST_CASE("derived Kantor triple systems") {
  const TripleSystem field = kts_from_structurable(make_unit_field());
  CHECK(field.t(0, 0, 0, 0) == Scalar(1));

  const TripleSystem quat = kts_from_structurable(make_quat());
  // rho(x) = xee = 2x - conj(x): diag(1, 3, 3, 3).
  const Vec one = vec({1, 0, 0, 0});
  for (size_t i = 0; i < 4; ++i) {
    const Vec expect = (i == 0 ? Scalar(1) : Scalar(3)) * Vec::unit(4, i);
    CHECK(quat.product(Vec::unit(4, i), one, one) == expect);
  }

  CHECK_NOTHROW(kts_from_structurable(make_mat2_transpose()));
  CHECK_NOTHROW(kts_from_structurable(make_split_pair()));
}

TEST_CASE("twisted derived systems") {
  const InvolutiveAlgebra quat = make_quat();
  CHECK(twisted_kts(quat, Mat::identity(4)) == kts_from_structurable(quat));

  const TripleSystem twisted = twisted_kts(quat, quat_conj_i());
  CHECK(twisted != kts_from_structurable(quat));
  // The twist changes exactly the triples with middle slot j or k.
  const Vec j = vec({0, 0, 1, 0});
  CHECK(twisted.product(quat.unit(), j, quat.unit()) ==
        -(kts_from_structurable(quat).product(quat.unit(), j, quat.unit())));

  CHECK_NOTHROW(twisted_kts(make_split_pair(), swap_map()));
  CHECK_NOTHROW(twisted_kts(make_mat2_transpose(), mat2_conj_diag()));

  CHECK_THROWS_AS(twisted_kts(quat, Scalar(2) * Mat::identity(4)), HypothesisError);
}

TEST_CASE("hermitian/skew split") {
  auto [sym_q, skew_q] = hermitian_skew_split(make_quat());
  CHECK(sym_q.size() == 1);
  CHECK(skew_q.size() == 3);

  auto [sym_f, skew_f] = hermitian_skew_split(make_unit_field());
  CHECK(sym_f.size() == 1);
  CHECK(skew_f.size() == 0);

  auto [sym_m, skew_m] = hermitian_skew_split(make_mat2_transpose());
  CHECK(sym_m.size() == 3);
  CHECK(skew_m.size() == 1);
}

TEST_CASE("split of the involution matches the rho eigensplit") {
  // For the derived system, U_1 = symmetric part and U_3 = skew part.
  const InvolutiveAlgebra quat = make_quat();
  const TripleSystem ts = kts_from_structurable(quat);
  Mat rho(4, 4);
  for (size_t i = 0; i < 4; ++i)
    rho.set_column(i, ts.product(Vec::unit(4, i), quat.unit(), quat.unit()));
  auto [p1, p3] = eigenprojections(rho, Scalar(1), Scalar(3));
  auto [sym, skew] = hermitian_skew_split(quat);
  for (const auto& v : sym) CHECK(p1.apply(v) == v);
  for (const auto& v : skew) CHECK(p3.apply(v) == v);
}
