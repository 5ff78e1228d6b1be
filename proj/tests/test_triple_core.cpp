#include "doctest.h"
#include "kantor/corpus.hpp"
#include "kantor/errors.hpp"
#include "kantor/structurable.hpp"
#include "kantor/triple.hpp"

using namespace kantor;

namespace {

Vec vec(std::initializer_list<long> entries) {
  Vec v(entries.size());
  size_t i = 0;
  for (long e : entries) v[i++] = Scalar(e);
  return v;
}

}  // namespace

TEST_CASE("triple products by contraction") {
  const TripleSystem field = make_scalar_fkts();  // xyz = xyz over F
  CHECK(field.product(vec({2}), vec({3}), vec({5})) == vec({30}));
  CHECK(field.product(vec({0}), vec({3}), vec({5})).is_zero());

  const TripleSystem quat = kts_from_structurable(make_quat());
  const Vec one = vec({1, 0, 0, 0});
  const Vec i = vec({0, 1, 0, 0});
  CHECK(quat.product(one, one, i) == i);              // eex = x at e = 1
  CHECK(quat.product(Vec(4), one, i).is_zero());      // linearity in the first slot
  CHECK(quat.product(i, one, one) == Scalar(3) * i);  // xee = rho(x), rho(i) = 3i
}

TEST_CASE("L operators") {
  const TripleSystem quat = kts_from_structurable(make_quat());
  CHECK(quat.L(vec({1, 0, 0, 0}), vec({1, 0, 0, 0})).is_identity());
  CHECK(quat.L(Vec(4), vec({0, 1, 0, 0})).is_zero());

  const TripleSystem field = make_scalar_fkts();
  CHECK(field.L(vec({2}), vec({3})) == Scalar(6) * Mat::identity(1));
}

TEST_CASE("K operators") {
  const TripleSystem quat = kts_from_structurable(make_quat());
  const Vec i = vec({0, 1, 0, 0});
  CHECK(quat.K(i, i, 1).is_zero());  // alternating for delta = 1
  CHECK(quat.K(i, vec({1, 0, 0, 0}), 1).apply(vec({1, 0, 0, 0})) == Scalar(2) * i);

  const TripleSystem field = make_scalar_fkts();
  CHECK(field.K(vec({1}), vec({1}), -1) == Scalar(2) * Mat::identity(1));

  // K(x,y) = -delta K(y,x): symmetric for delta = -1, alternating for +1.
  const TripleSystem swap = make_swap_fkts();
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 2; ++b) CHECK(swap.K_basis(a, b, -1) == swap.K_basis(b, a, -1));
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = 0; b < 4; ++b)
      CHECK(quat.K_basis(a, b, 1) == -(quat.K_basis(b, a, 1)));
}

TEST_CASE("check_gjts verdicts") {
  CHECK(check_gjts(make_scalar_fkts()).passed());
  CHECK(check_gjts(kts_from_structurable(make_quat())).passed());
  CHECK(check_gjts(make_bilinear_form_system()).passed());

  // e0 e0 e0 = e0 together with e0 e1 e0 = e0 breaks the identity: at
  // (u,v,x,y) = (0,0,0,1) the commutator side vanishes while the right side
  // is L(e0,e1) != 0.
  TripleSystem broken(2);
  broken.t(0, 0, 0, 0) = 1;
  broken.t(0, 1, 0, 0) = 1;
  const Report rep = check_gjts(broken);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.items.size() == 1);
  REQUIRE(rep.items[0].witness.has_value());
  CHECK(rep.items[0].witness->tuple == std::vector<size_t>{0, 0, 0, 1});
}

TEST_CASE("check_fkts verdicts") {
  CHECK(check_fkts(kts_from_structurable(make_quat()), SignPair(-1, 1)).passed());
  CHECK(check_fkts(make_scalar_fkts(), SignPair(-1, -1)).passed());
  CHECK_FALSE(check_fkts(make_scalar_fkts(), SignPair(1, -1)).passed());
  CHECK(check_fkts(make_swap_fkts(), SignPair(-1, -1)).passed());

  // A left-unital GJTS that is not Kantor: the second axiom must fail.
  const TripleSystem bil = make_bilinear_form_system();
  const Report rep = check_fkts(bil, SignPair(-1, 1));
  CHECK_FALSE(rep.passed());
  CHECK(rep.items[0].passed);        // the GJTS-equivalent identity holds
  CHECK_FALSE(rep.items[1].passed);  // the K identity does not
}

TEST_CASE("left units need not be unique") {
  const TripleSystem quat = kts_from_structurable(make_quat());
  CHECK(is_left_unit(quat, vec({1, 0, 0, 0})));
  // V_{i,i} = (i . conj i) . z = z, so i is a left unit of the untwisted
  // system as well.
  CHECK(is_left_unit(quat, vec({0, 1, 0, 0})));
  CHECK_FALSE(is_left_unit(quat, vec({1, 1, 0, 0})));  // norm 2

  const TripleSystem twisted = twisted_kts(make_quat(), quat_conj_i());
  CHECK(is_left_unit(twisted, vec({1, 0, 0, 0})));
  CHECK_FALSE(is_left_unit(twisted, vec({0, 0, 1, 0})));

  const TripleSystem bil = make_bilinear_form_system();
  CHECK(is_left_unit(bil, vec({1, 0})));  // (u|u) = 1
  CHECK_FALSE(is_left_unit(bil, vec({1, 1})));
}

TEST_CASE("is_automorphism") {
  const TripleSystem pair = make_componentwise_pair();
  CHECK(is_automorphism(pair, Mat::identity(2)));
  CHECK(is_automorphism(pair, swap_map()));

  const TripleSystem field = make_scalar_fkts();
  CHECK_FALSE(is_automorphism(field, Scalar(2) * Mat::identity(1)));
  CHECK_THROWS_AS(is_automorphism(field, Mat(1, 1)), SingularOperatorError);
}

TEST_CASE("special and unitary classification") {
  CHECK(check_special(make_scalar_fkts(), SignPair(-1, -1)));
  CHECK(check_unitary(make_scalar_fkts(), SignPair(-1, -1)));

  CHECK_FALSE(check_special(make_swap_fkts(), SignPair(-1, -1)));
  CHECK_FALSE(check_unitary(make_swap_fkts(), SignPair(-1, -1)));

  const TripleSystem quat = kts_from_structurable(make_quat());
  CHECK_FALSE(check_unitary(quat, SignPair(-1, 1)));
}

TEST_CASE("fkts(-1,1) agrees with gjts plus the K identity on the corpus") {
  const std::vector<TripleSystem> systems = {
      kts_from_structurable(make_unit_field()),
      kts_from_structurable(make_split_pair()),
      kts_from_structurable(make_quat()),
      kts_from_structurable(make_mat2_transpose()),
      make_bilinear_form_system(),
      make_scalar_fkts(),
  };
  for (const auto& ts : systems) {
    const Report fk = check_fkts(ts, SignPair(-1, 1));
    CHECK(fk.items[0].passed == check_gjts(ts).passed());
  }
}
