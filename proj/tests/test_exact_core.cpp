#include "doctest.h"
#include "kantor/corpus.hpp"
#include "kantor/errors.hpp"
#include "kantor/linalg.hpp"
#include "kantor/scalar.hpp"

using namespace kantor;

namespace {

// Small deterministic generator for property-style sweeps.
struct Rng {
  unsigned long state = 0x9e3779b9UL;
  long next(long lo, long hi) {
    state = state * 6364136223846793005UL + 1442695040888963407UL;
    return lo + static_cast<long>((state >> 33) % static_cast<unsigned long>(hi - lo + 1));
  }
  Scalar scalar() { return Scalar(next(-6, 6), next(1, 4)); }
  Mat matrix(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m.at(i, j) = scalar();
    return m;
  }
};

Mat diag(std::initializer_list<Scalar> entries) {
  Mat m(entries.size(), entries.size());
  size_t i = 0;
  for (const auto& e : entries) m.at(i, i) = e, ++i;
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
  CHECK(Scalar(2, 4).str() == "1/2");
  CHECK(Scalar(-2, -4).str() == "1/2");
  CHECK(Scalar(2, -4).str() == "-1/2");
  CHECK((Scalar(1, 3) + Scalar(1, 6)).str() == "1/2");
  CHECK((Scalar(1, 3) * Scalar(3)).is_one());
  CHECK(Scalar::parse("-7/3").str() == "-7/3");
  CHECK(Scalar::parse("5/10").str() == "1/2");
  CHECK(Scalar::parse("42").str() == "42");
  CHECK(Scalar(1, 7).inverse().str() == "7");
  CHECK_THROWS_AS(Scalar::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(""), ParseError);
  CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
  CHECK_THROWS_AS(Scalar(1, 0), InputError);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("span_basis handles degenerate generators") {
  const Mat zero2(2, 2);
  CHECK(span_basis({zero2}).size() == 0);

  const Mat id2 = Mat::identity(2);
  const OperatorSpan s = span_basis({id2, Scalar(2) * id2});
  CHECK(s.size() == 1);
  CHECK(s.contains(id2));
  CHECK_FALSE(s.contains(Mat::unflatten(2, 2, {Scalar(0), Scalar(1), Scalar(0), Scalar(0)})));

  CHECK_THROWS_AS(span_basis({id2, Mat::identity(3)}), DimensionMismatch);
}

TEST_CASE("K operators of swap-fkts span {E12, E21}") {
  // Independent oracle: expand K(e_i, e_j) z = e_i z e_j + e_j z e_i directly
  // from the twisted tensor {xyz} = x . swap(y) . z, then row-reduce.
  TripleSystem ts(2);
  ts.t(0, 1, 0, 0) = 1;  // e0 swap(e1) e0 = e0
  ts.t(1, 0, 1, 1) = 1;
  std::vector<Mat> kops;
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      Mat k(2, 2);
      for (size_t z = 0; z < 2; ++z) {
        const Vec img = ts.product_basis(i, z, j) + ts.product_basis(j, z, i);
        k.set_column(z, img);
      }
      kops.push_back(k);
    }
  const OperatorSpan span = span_basis(kops);
  CHECK(span.size() == 2);
  Mat e12(2, 2), e21(2, 2);
  e12.at(0, 1) = 1;
  e21.at(1, 0) = 1;
  CHECK(span.contains(e12));
  CHECK(span.contains(e21));
  CHECK_FALSE(span.contains(Mat::identity(2)));

  // Same span through the library path.
  const OperatorSpan lib = k_span(make_swap_fkts(), -1);
  CHECK(lib.size() == 2);
  CHECK(lib.contains(e12));
  CHECK(lib.contains(e21));
}

TEST_CASE("operator_inverse on the catalog examples") {
  CHECK(inverse(Mat::identity(3)) == Mat::identity(3));
  CHECK(inverse(diag({Scalar(1), Scalar(3)})) == diag({Scalar(1), Scalar(1, 3)}));

  // mu of the quaternion system: x -> 2 conj(x) - x = diag(1, -3, -3, -3).
  // Its square is diag(1, 9, 9, 9), so mu is not an involution; the exact
  // inverse is diag(1, -1/3, -1/3, -1/3).
  const Mat mu = diag({Scalar(1), Scalar(-3), Scalar(-3), Scalar(-3)});
  CHECK(mu * mu == diag({Scalar(1), Scalar(9), Scalar(9), Scalar(9)}));
  CHECK(inverse(mu) ==
        diag({Scalar(1), Scalar(-1, 3), Scalar(-1, 3), Scalar(-1, 3)}));

  Mat singular(2, 2);
  singular.at(0, 0) = 1;
  singular.at(1, 0) = 2;
  CHECK_THROWS_AS(inverse(singular), SingularOperatorError);
}

TEST_CASE("inverse is a two-sided inverse on random matrices") {
  Rng rng;
  int tested = 0;
  while (tested < 12) {
    const Mat m = rng.matrix(4);
    try {
      const Mat mi = inverse(m);
      CHECK(m * mi == Mat::identity(4));
      CHECK(mi * m == Mat::identity(4));
      ++tested;
    } catch (const SingularOperatorError&) {
      // draw again
    }
  }
}

TEST_CASE("poly_on_operator") {
  const Mat id3 = Mat::identity(3);
  CHECK(poly_on_operator(id3, {Scalar(-1), Scalar(1)}).is_zero());

  const Mat rho = diag({Scalar(1), Scalar(3), Scalar(3), Scalar(3)});
  CHECK(poly_on_operator(rho, {Scalar(3), Scalar(-4), Scalar(1)}).is_zero());

  // rho_hat = 3 id - 2 rho at rho = id.
  CHECK(poly_on_operator(id3, {Scalar(3), Scalar(-2)}) == id3);
}

TEST_CASE("eigenprojections") {
  const Mat id2 = Mat::identity(2);
  {
    auto [p1, p2] = eigenprojections(id2, Scalar(1), Scalar(3));
    CHECK(p1 == id2);
    CHECK(p2.is_zero());
  }
  {
    const Mat rho = diag({Scalar(1), Scalar(3), Scalar(3), Scalar(3)});
    auto [p1, p3] = eigenprojections(rho, Scalar(1), Scalar(3));
    CHECK(rank(p1) == 1);
    CHECK(rank(p3) == 3);
    CHECK(p1 * p1 == p1);
    CHECK(p3 * p3 == p3);
    CHECK((p1 * p3).is_zero());
    CHECK(p1 + p3 == Mat::identity(4));
    CHECK(rho * p1 == p1);
    CHECK(rho * p3 == Scalar(3) * p3);
  }
  {
    auto [p1, p2] = eigenprojections(id2, Scalar(1), Scalar(-1));
    CHECK(p1 == id2);
    CHECK(p2.is_zero());
  }
  CHECK_THROWS_AS(eigenprojections(id2, Scalar(1), Scalar(1)), HypothesisError);
  CHECK_THROWS_AS(eigenprojections(diag({Scalar(2), Scalar(1)}), Scalar(1), Scalar(3)),
                  HypothesisError);
}

TEST_CASE("row spans are canonical and idempotent") {
  Rng rng;
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Mat> gens;
    for (int g = 0; g < 5; ++g) gens.push_back(rng.matrix(3));
    const OperatorSpan span = span_basis(gens);
    std::vector<Mat> reduced;
    for (size_t i = 0; i < span.size(); ++i) reduced.push_back(span.basis_op(i));
    const OperatorSpan again = span_basis(reduced);
    CHECK(again.size() == span.size());
    for (size_t i = 0; i < span.size(); ++i) CHECK(again.basis_op(i) == span.basis_op(i));
    for (const auto& g : gens) {
      CHECK(span.contains(g));
      const auto coords = span.coordinates(g);
      REQUIRE(coords.has_value());
      Mat rebuilt(3, 3);
      for (size_t i = 0; i < coords->size(); ++i) rebuilt += (*coords)[i] * span.basis_op(i);
      CHECK(rebuilt == g);
    }
  }
}

TEST_CASE("nullspace") {
  Mat m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 2) = 1;
  m.at(1, 1) = 1;
  const auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  CHECK(m.apply(basis[0]).is_zero());
  CHECK_FALSE(basis[0].is_zero());
}
