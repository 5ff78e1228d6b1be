#include "doctest.h"
#include "kantor/chevalley.hpp"
#include "kantor/errors.hpp"

using namespace kantor;

TEST_CASE("catalog algebras and their gradings") {
  {
    const ChevalleyAlgebra a1 = chevalley_algebra(SimpleType::A1);
    CHECK(a1.dim() == 3);
    const HighestRootGrading g = highest_root_grading(a1);
    CHECK(g.dims == std::array<size_t, 5>{1, 0, 1, 0, 1});
    CHECK(g.degenerate);
    CHECK_THROWS_AS(kantor_on_g1(a1, g, chevalley_phi(a1)), HypothesisError);
  }
  {
    const ChevalleyAlgebra a2 = chevalley_algebra(SimpleType::A2);
    CHECK(a2.dim() == 8);
    CHECK(highest_root_grading(a2).dims == std::array<size_t, 5>{1, 2, 2, 2, 1});
  }
  {
    const ChevalleyAlgebra a3 = chevalley_algebra(SimpleType::A3);
    CHECK(a3.dim() == 15);
    CHECK(highest_root_grading(a3).dims == std::array<size_t, 5>{1, 4, 5, 4, 1});
  }
  {
    const ChevalleyAlgebra c2 = chevalley_algebra(SimpleType::C2);
    CHECK(c2.dim() == 10);
    CHECK(highest_root_grading(c2).dims == std::array<size_t, 5>{1, 2, 4, 2, 1});
  }
  CHECK_THROWS_AS(parse_simple_type("G2"), InputError);
}

TEST_CASE("phi negates the Cartan and swaps opposite root vectors") {
  const ChevalleyAlgebra a2 = chevalley_algebra(SimpleType::A2);
  const Mat phi = chevalley_phi(a2);
  const size_t rho = a2.highest_root_index();
  CHECK(phi.column(rho) == -Vec::unit(a2.dim(), a2.negative_of(rho)));
  for (size_t i = 0; i < a2.dim(); ++i) {
    if (a2.elem(i).is_root) continue;
    CHECK(phi.column(i) == -Vec::unit(a2.dim(), i));
  }
  CHECK((phi * phi).is_identity());
}

TEST_CASE("the Kantor system on g_1") {
  for (const auto type : {SimpleType::A2, SimpleType::A3, SimpleType::C2}) {
    const ChevalleyAlgebra alg = chevalley_algebra(type);
    const HighestRootGrading grading = highest_root_grading(alg);
    const Mat phi = chevalley_phi(alg);
    // kantor_on_g1 re-verifies sigma^2 = -id, K(u,v) = <u|v> sigma,
    // sigma in K(U,U) and the (-1,1) axioms.
    const KantorOnG1 k = kantor_on_g1(alg, grading, phi);
    CHECK(k.system.dim() == grading.g1.size());
    CHECK(k.sigma * k.sigma == -Mat::identity(k.system.dim()));
  }
  // For sl3 the two degree-one root vectors pair to <u1|u2> = 1.
  const ChevalleyAlgebra a2 = chevalley_algebra(SimpleType::A2);
  const KantorOnG1 k = kantor_on_g1(a2, highest_root_grading(a2), chevalley_phi(a2));
  CHECK(k.form.at(0, 1) == Scalar(1));
  CHECK(k.form.at(1, 0) == Scalar(-1));
  CHECK(k.form.at(0, 0).is_zero());
}

TEST_CASE("balanced twist and the symmetric product") {
  for (const auto type : {SimpleType::A2, SimpleType::A3, SimpleType::C2}) {
    const ChevalleyAlgebra alg = chevalley_algebra(type);
    const HighestRootGrading grading = highest_root_grading(alg);
    const KantorOnG1 k = kantor_on_g1(alg, grading, chevalley_phi(alg));
    const TripleSystem balanced = balanced_twist(k);  // re-verifies (1,1) and K*
    const TripleSystem sym = freudenthal_product(balanced, k.form);
    CHECK(sym.dim() == k.system.dim());
  }
}

TEST_CASE("frozen symmetric-product values for sl3") {
  const ChevalleyAlgebra a2 = chevalley_algebra(SimpleType::A2);
  const KantorOnG1 k = kantor_on_g1(a2, highest_root_grading(a2), chevalley_phi(a2));
  const TripleSystem balanced = balanced_twist(k);
  const TripleSystem sym = freudenthal_product(balanced, k.form);
  // (u1,u1,u1) = 0 and (u1,u2,u2) = -3/2 u2, both expanded by hand from
  // sigma(u1) = u2, sigma(u2) = -u1 and the bracket table of sl3.
  CHECK(sym.product_basis(0, 0, 0).is_zero());
  Vec expect(2);
  expect[1] = Scalar(-3, 2);
  CHECK(sym.product_basis(0, 1, 1) == expect);
}

TEST_CASE("recover_fkts on the graded algebra matches kantor_on_g1") {
  for (const auto type : {SimpleType::A2, SimpleType::C2}) {
    const ChevalleyAlgebra alg = chevalley_algebra(type);
    const HighestRootGrading grading = highest_root_grading(alg);
    const Mat phi = chevalley_phi(alg);
    const TripleSystem via_graded =
        recover_fkts(to_graded(alg, grading), PhiMap{phi}, SignPair(-1, 1));
    const TripleSystem direct = kantor_on_g1(alg, grading, phi).system;
    CHECK(via_graded == direct);
  }
}
