// Acceptance suite: every check runs in exact rational arithmetic with
// zero tolerance; the only numeric budgets are wall-clock limits.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "kantor/bridge.hpp"
#include "kantor/catalog.hpp"
#include "kantor/chevalley.hpp"
#include "kantor/corpus.hpp"
#include "kantor/lie.hpp"

using namespace kantor;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

Vec vec(std::initializer_list<long> entries) {
  Vec v(entries.size());
  size_t i = 0;
  for (long e : entries) v[i++] = Scalar(e);
  return v;
}

std::vector<InvolutiveAlgebra> corpus_algebras() {
  return {make_unit_field(), make_split_pair(), make_quat(), make_mat2_transpose()};
}

struct AlgebraPair {
  InvolutiveAlgebra algebra;
  Mat sigma;
};

std::vector<AlgebraPair> corpus_pairs() {
  return {{make_unit_field(), Mat::identity(1)},
          {make_split_pair(), swap_map()},
          {make_quat(), quat_conj_i()},
          {make_mat2_transpose(), mat2_conj_diag()}};
}

struct CorpusSystem {
  TripleSystem ts;
  SignPair signs;
  Vec unit;
};

std::vector<CorpusSystem> corpus_systems() {
  std::vector<CorpusSystem> out;
  for (const auto& p : corpus_pairs()) {
    out.push_back({kts_from_structurable(p.algebra), SignPair(-1, 1), p.algebra.unit()});
    if (!p.sigma.is_identity())
      out.push_back({twisted_kts(p.algebra, p.sigma), SignPair(-1, 1), p.algebra.unit()});
  }
  out.push_back({make_scalar_fkts(), SignPair(-1, -1), vec({1})});
  out.push_back({make_swap_fkts(), SignPair(-1, -1), vec({1, 1})});
  return out;
}

// --- criterion bodies -------------------------------------------------------

void criterion_structurable() {
  for (const auto& a : corpus_algebras())
    require(check_structurable(a).passed(), a.label() + " fails the structurable sweeps");
}

void criterion_kantor_derivation() {
  for (const auto& a : corpus_algebras()) {
    const TripleSystem ts = kts_from_structurable(a);
    require(check_fkts(ts, SignPair(-1, 1)).passed(), a.label() + ": derived system not (-1,1)");
    require(is_left_unit(ts, a.unit()), a.label() + ": eex != x at e = 1");
    const size_t n = ts.dim();
    Mat rho(n, n), mu(n, n);
    for (size_t i = 0; i < n; ++i) {
      rho.set_column(i, ts.product(Vec::unit(n, i), a.unit(), a.unit()));
      mu.set_column(i, ts.product(a.unit(), Vec::unit(n, i), a.unit()));
    }
    Mat three = Mat::identity(n);
    three *= Scalar(3);
    require(Scalar(2) * rho + mu == three, a.label() + ": 2xee + exe != 3x at e = 1");
  }
}

void criterion_roundtrip() {
  for (const auto& p : corpus_pairs()) {
    const TripleSystem ts = twisted_kts(p.algebra, p.sigma);
    const StructurableResult rec = structurable_of_left_unital(ts, p.algebra.unit());
    require(rec.algebra == p.algebra, p.algebra.label() + ": algebra not recovered exactly");
    require(rec.sigma == p.sigma, p.algebra.label() + ": automorphism not recovered exactly");
    require(twisted_kts(rec.algebra, rec.sigma) == ts,
            p.algebra.label() + ": tensor roundtrip mismatch");
  }
}

void criterion_lemma_suites() {
  for (const auto& sys : corpus_systems()) {
    if (sys.signs.delta == 1) {
      require(check_unit_identities_kantor(sys.ts, sys.unit).passed(),
              sys.ts.label() + ": Kantor unit identities fail");
    } else {
      require(check_unit_identities_mm(sys.ts, sys.unit).passed(),
              sys.ts.label() + ": (-1,-1) unit identities fail");
    }
  }
  const TripleSystem quat = kts_from_structurable(make_quat());
  const BridgeMaps maps = bridge_maps(quat, vec({1, 0, 0, 0}), SignPair(-1, 1));
  require(poly_on_operator(maps.rho, {Scalar(3), Scalar(-4), Scalar(1)}).is_zero(),
          "(rho-id)(rho-3id) != 0 on quat");
  const EigenProfile prof = rho_eigenprofile(maps, SignPair(-1, 1));
  require(prof.basis1.size() == 1 && prof.basis2.size() == 3,
          "quat eigencomponent dims are not (1,3)");
}

void criterion_star_suite() {
  require(check_star_identities(kts_from_structurable(make_quat()), vec({1, 0, 0, 0})).passed(),
          "star identities fail on quat");
  require(check_star_identities(twisted_kts(make_split_pair(), swap_map()), vec({1, 1}))
              .passed(),
          "star identities fail on the twisted split pair");
}

void criterion_mu_normalize() {
  const Vec e = vec({1, 1});
  const TripleSystem out = mu_normalize(make_swap_fkts(), e);
  require(is_left_unit(out, e), "normalized system lost eex = x");
  for (size_t i = 0; i < 2; ++i)
    require(out.product(e, Vec::unit(2, i), e) == Vec::unit(2, i),
            "normalized system fails exe = x");
  require(out.K(e, e, -1) == Scalar(2) * Mat::identity(2), "K(e,e) != 2 id");
  require(check_unitary(out, SignPair(-1, -1)), "normalized system not unitary");
  require(check_special(out, SignPair(-1, -1)), "normalized system not special");
}

void criterion_gu_integrity() {
  for (const auto& sys : corpus_systems()) {
    const LieBuild b = build_gU(sys.ts, sys.signs);
    require(check_super_jacobi(b.g).passed(), b.g.label() + " fails super-Jacobi");
    require(check_grading(b.g).passed(), b.g.label() + " fails its grading");
    const TripleSystem back = recover_fkts(b.g, phi_of_gU(b), sys.signs);
    require(back == sys.ts, b.g.label() + ": recovered tensor differs");
  }
  const auto dims_of = [](const TripleSystem& ts, SignPair signs) {
    return build_gU(ts, signs).g.dims_by_degree();
  };
  require(dims_of(kts_from_structurable(make_unit_field()), SignPair(-1, 1)) ==
              std::array<size_t, 5>{0, 1, 1, 1, 0},
          "unit-field dims are not (0,1,1,1,0)");
  require(dims_of(make_scalar_fkts(), SignPair(-1, -1)) == std::array<size_t, 5>{1, 1, 1, 1, 1},
          "scalar-fkts dims are not (1,1,1,1,1)");
  require(dims_of(make_swap_fkts(), SignPair(-1, -1)) == std::array<size_t, 5>{2, 2, 2, 2, 2},
          "swap-fkts dims are not (2,2,2,2,2)");
}

// Degree-by-degree alignment of two (1,1,1,1,1)-graded algebras on the
// basis order (F, Y, H, X, E): normalize the degree-1 scale to 1, derive
// the rest from [H,X], [X,Y], [X,X], [Y,Y], then demand an exact
// structure-constant match.
void align_one_per_degree(const GradedSuperalgebra& a, const GradedSuperalgebra& b) {
  require(a.dims_by_degree() == std::array<size_t, 5>{1, 1, 1, 1, 1} &&
              b.dims_by_degree() == a.dims_by_degree(),
          "alignment needs one basis element per degree");
  Vec s(5);
  s[3] = 1;
  require(!b.b(2, 3, 3).is_zero() && !b.b(3, 1, 2).is_zero() && !b.b(3, 3, 4).is_zero() &&
              !b.b(1, 1, 0).is_zero(),
          "alignment reference brackets vanish");
  s[2] = a.b(2, 3, 3) / b.b(2, 3, 3);
  s[1] = a.b(3, 1, 2) * s[2] / b.b(3, 1, 2);
  s[4] = (s[3] * s[3]) * b.b(3, 3, 4) / a.b(3, 3, 4);
  s[0] = (s[1] * s[1]) * b.b(1, 1, 0) / a.b(1, 1, 0);
  for (size_t i = 0; i < 5; ++i) require(!s[i].is_zero(), "degenerate alignment scale");
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j)
      for (size_t k = 0; k < 5; ++k)
        require(a.b(i, j, k) * s[k] == s[i] * s[j] * b.b(i, j, k),
                "structure constants differ after alignment");
}

void criterion_osp12_golden() {
  const Osp12Model m = osp12_model();
  const LieBuild b = build_gU(make_scalar_fkts(), SignPair(-1, -1));
  align_one_per_degree(b.g, m.g);

  const Mat conj_inv = inverse(m.conjugator);
  require(m.conjugator * m.X * conj_inv == m.Y, "Phi(X) != Y");
  require(m.conjugator * m.X_hat * conj_inv == m.Y_hat, "Phi(X-hat) != Y-hat");
  require(m.g.bracket_basis(3, 3) == Scalar(-2) * Vec::unit(5, 4), "[X,X] != -2E");
  require(b01_left_unit_check(m.g, m.phi, Vec::unit(5, 3)),
          "e = X fails the left-unit check");
}

void criterion_b01_decomposition() {
  {
    const LieBuild b = build_gU(make_scalar_fkts(), SignPair(-1, -1));
    const B01Decomposition dec = b01_decompose(b.g, phi_of_gU(b), b.embed_g1(vec({1})));
    require(dec.report.passed(), "scalar-fkts decomposition checks fail");
    require(dec.adjoint_count == 1 && dec.natural_count == 0 && dec.trivial_dim == 0,
            "scalar-fkts modules are not (1,0,0)");
    require(5 * dec.adjoint_count + 3 * dec.natural_count + dec.trivial_dim == b.g.dim(),
            "scalar-fkts dimension formula 5 = 5*1 fails");
  }
  {
    const TripleSystem normalized = mu_normalize(make_swap_fkts(), vec({1, 1}));
    const LieBuild b = build_gU(normalized, SignPair(-1, -1));
    const B01Decomposition dec =
        b01_decompose(b.g, phi_of_gU(b), b.embed_g1(vec({1, 1})));
    require(dec.report.passed(), "swap-fkts decomposition checks fail");
    require(dec.adjoint_count == 2 && dec.natural_count == 0 && dec.trivial_dim == 0,
            "swap-fkts modules are not (2,0,0)");
    require(5 * dec.adjoint_count + 3 * dec.natural_count + dec.trivial_dim == b.g.dim(),
            "swap-fkts dimension formula 10 = 5*2 fails");
    for (const auto& x : dec.natural_gens)
      require(b.g.bracket(b.embed_g1(vec({1, 1})), x).is_zero(), "K(e,x) != 0 on U_{-1}");
  }
}

void criterion_chevalley() {
  {
    const ChevalleyAlgebra a2 = chevalley_algebra(SimpleType::A2);
    require(highest_root_grading(a2).dims == std::array<size_t, 5>{1, 2, 2, 2, 1},
            "A2 grading dims are not (1,2,2,2,1)");
  }
  {
    const ChevalleyAlgebra a3 = chevalley_algebra(SimpleType::A3);
    require(highest_root_grading(a3).dims == std::array<size_t, 5>{1, 4, 5, 4, 1},
            "A3 grading dims are not (1,4,5,4,1)");
  }
  for (const auto type : {SimpleType::A2, SimpleType::A3}) {
    const ChevalleyAlgebra alg = chevalley_algebra(type);
    const HighestRootGrading grading = highest_root_grading(alg);
    const Mat phi = chevalley_phi(alg);
    // kantor_on_g1 verifies sigma^2 = -id, K(u,v) = <u|v> sigma and the
    // (-1,1) axioms; balanced_twist verifies (1,1) and K* = -<u|v> id;
    // freudenthal_product verifies first-two-argument symmetry.
    const KantorOnG1 k = kantor_on_g1(alg, grading, phi);
    require(k.sigma * k.sigma == -Mat::identity(k.system.dim()),
            simple_type_name(type) + ": sigma^2 != -id");
    const TripleSystem balanced = balanced_twist(k);
    require(check_fkts(balanced, SignPair(1, 1)).passed(),
            simple_type_name(type) + ": twisted system not (1,1)");
    freudenthal_product(balanced, k.form);
  }
}

void criterion_sign_flips() {
  {
    const TripleSystem two = double_m21(kts_from_structurable(make_unit_field()),
                                        SignPair(-1, 1));
    require(check_fkts(two, SignPair(1, 1)).passed(), "double of unit-field not (1,1)");
    require(!check_fkts(two, SignPair(-1, 1)).passed(),
            "double of unit-field still passes (-1,1)");
  }
  {
    const TripleSystem two = double_m21(make_scalar_fkts(), SignPair(-1, -1));
    require(check_fkts(two, SignPair(1, -1)).passed(), "double of scalar-fkts not (1,-1)");
    require(!check_fkts(two, SignPair(-1, -1)).passed(),
            "double of scalar-fkts still passes (-1,-1)");
  }
  {
    const TwistResult tw = twist(kts_from_structurable(make_quat()), quat_conj_i(),
                                 SignPair(-1, 1));
    require(tw.signs == SignPair(-1, 1) && check_fkts(tw.system, tw.signs).passed(),
            "involutive twist changed the quat verdict");
  }
  {
    const TwistResult tw = twist(make_componentwise_pair(), swap_map(), SignPair(-1, -1));
    require(tw.signs == SignPair(-1, -1) && check_fkts(tw.system, tw.signs).passed(),
            "involutive twist changed the (-1,-1) verdict");
  }
}

void criterion_twist_isomorphism() {
  require(check_twist_isomorphism(kts_from_structurable(make_quat()), quat_conj_i(),
                                  SignPair(-1, 1))
              .passed(),
          "bracket match fails for (quat, conjugation-by-i)");
  require(check_twist_isomorphism(kts_from_structurable(make_split_pair()), swap_map(),
                                  SignPair(-1, 1))
              .passed(),
          "bracket match fails for (split-pair, swap)");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "structurable-sweeps", 5.0, criterion_structurable},
      {2, "kantor-derivation", 10.0, criterion_kantor_derivation},
      {3, "structurable-roundtrip", 30.0, criterion_roundtrip},
      {4, "unit-identity-suites", 60.0, criterion_lemma_suites},
      {5, "star-identities", 60.0, criterion_star_suite},
      {6, "mu-normalization", 60.0, criterion_mu_normalize},
      {7, "lie-superalgebra-integrity", 60.0, criterion_gu_integrity},
      {8, "osp12-golden", 60.0, criterion_osp12_golden},
      {9, "b01-decomposition", 60.0, criterion_b01_decomposition},
      {10, "chevalley-example", 60.0, criterion_chevalley},
      {11, "sign-flip-laws", 60.0, criterion_sign_flips},
      {12, "twist-isomorphism", 60.0, criterion_twist_isomorphism},
  };

  int failures = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = error.empty();
    if (ok && seconds > c.budget_seconds) {
      ok = false;
      error = "exceeded its time budget";
    }
    if (!ok) ++failures;
    std::printf("criterion %02d [%s] %s (%.2fs)\n", c.id, c.name, ok ? "PASS" : "FAIL",
                seconds);
    if (!error.empty()) std::printf("  -> %s\n", error.c_str());
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("total %.2fs, %d of %zu criteria failed\n", total, failures, criteria.size());
  if (total > 300.0) {
    std::printf("full suite exceeded the five-minute target\n");
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}
