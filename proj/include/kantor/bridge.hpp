#pragma once

#include <optional>
#include <utility>

#include "kantor/structurable.hpp"
#include "kantor/triple.hpp"

namespace kantor {

/// The operators a left unit attaches to a triple system:
///   rho: x -> xee,  mu: x -> exe,  rho_hat = 3 id - 2 rho,
///   sigma = mu^{-1} rho_hat.
/// For a left-unital Kantor system sigma is an involutive automorphism;
/// in the (-1,-1) case the relevant automorphism is mu itself.
struct BridgeMaps {
  Mat rho;
  Mat mu;
  Mat rho_hat;
  Mat sigma;
  Vec e;
};

/// Computes the maps and verifies the operator identities they must satisfy:
/// delta = +1: (rho-id)(rho-3id) = 0, rho mu = mu rho, rho^2 = mu^2,
///             sigma^2 = id;
/// delta = -1: rho^2 = id, mu^2 = id, rho mu = mu rho.
/// Refuses on a singular mu, which contradicts the invertibility a left
/// unit forces in both classes.
BridgeMaps bridge_maps(const TripleSystem& ts, const Vec& e, const SignPair& signs);

/// Eigenstructure of rho: complementary projections and bases per component.
/// Kantor case: eigenvalues (1, 3); (-1,-1) case: (1, -1).
struct EigenProfile {
  Scalar r1, r2;
  Mat p1, p2;
  std::vector<Vec> basis1, basis2;
};
EigenProfile rho_eigenprofile(const BridgeMaps& maps, const SignPair& signs);

/// The identities tying L, K, rho and mu to a left unit of a Kantor system:
///   L(xye,e) = L(e,yxe)
///   L(rho x, e) = L(e, mu x),  L(mu x, e) = L(e, rho x)
///   rho^2 = mu^2,  rho mu = mu rho
///   K(u,e)e = (rho - id)u
///   K(u,v) = (1/2) K(K(u,v)e, e)
///   (rho - id)(rho - 3 id) = 0
/// Each identity reports its own verdict; the GJTS-level ones can pass on
/// systems where the Kantor-level ones fail.
Report check_unit_identities_kantor(const TripleSystem& ts, const Vec& e);

/// The (-1,-1) counterparts:
///   K(u,e)e = (rho + id)u,  K(u,v) = (1/2) K(K(u,v)e, e),
///   rho^2 = id,  mu^2 = id.
Report check_unit_identities_mm(const TripleSystem& ts, const Vec& e);

/// The unital binary product x * y = e mu^{-1}(x) y.
struct StarProduct {
  size_t dim;
  std::vector<Scalar> c;
  Vec mul(const Vec& x, const Vec& y) const;
  Vec mul_basis(size_t i, size_t j) const;
};
StarProduct star_product(const TripleSystem& ts, const BridgeMaps& maps);

/// Five-part sweep for the star product of a left-unital Kantor system:
///  (i)   e is a two-sided star unit
///  (ii)  exy = mu(x) * y   and   xey = rho(x) * y
///  (iii) xyz = x*(mu(y)*z) - mu(y)*(x*z) + mu(mu rho^{-1}(x)*y)*z
///  (iv)  xye = Lambda_{x,y}(eyx) with Lambda = id on x in U1,
///        -rho_hat for x in U3, y in U1, and rho_hat/3 for x, y in U3
///  (v)   rho(x*y) = 2x*y - y*x on equal components, 3y*x for x in U1,
///        y in U3, and 4x*y - y*x for x in U3, y in U1
/// Items (iv) and (v) are evaluated per eigencomponent pair.
Report check_star_identities(const TripleSystem& ts, const Vec& e);

/// sigma = mu^{-1}(3 id - 2 rho) squares to the identity and is an
/// automorphism of the triple system.
bool sigma_check(const TripleSystem& ts, const Vec& e);

struct TwistResult {
  TripleSystem system;
  SignPair signs;
};

/// New product {xyz} = x S(y) z.  Without a scalar, S must be an
/// automorphism with S^2 = c id, c = +-1; the signature becomes (c*eps,
/// del).  With square_scalar m, the hypotheses are S^2 = c*m id (c = +-1)
/// and S(x)S(y)S(z) = m S(xyz); the signature becomes (c*eps, del).
/// The result is re-verified with check_fkts before returning.
TwistResult twist(const TripleSystem& ts, const Mat& s, const SignPair& signs,
                  const std::optional<Scalar>& square_scalar = std::nullopt);

/// Doubling on 2x1 columns with componentwise product, twisted by
/// sigma(x,y) = (y,-x).  Flips eps.
TripleSystem double_m21(const TripleSystem& ts, const SignPair& signs);

/// Certifies that an operator S lying in the span of the K operators with
/// S^2 = eps*del id is an automorphism (or, with square_scalar m and
/// S^2 = m id, that S(xyz) = eps*del*m^{-1} S(x)S(y)S(z)), verifies the
/// intermediate identity
///   S(xyz) = -eps S(x)zy + eps yxS(z) + eps*del yzS(x),
/// and checks that the twist by S is a (del,del) system.
Report kspan_automorphism_check(const TripleSystem& ts, const Mat& s, const SignPair& signs,
                                const std::optional<Scalar>& square_scalar = std::nullopt);

/// For a structurable algebra with a skew element f whose square is a
/// nonzero scalar m, builds {xyz} = V_{x, f.y}(z), a (1,1) system.
/// Verifies the intermediate facts K(f,1) = 2 L_f and f.(f.x) = m x.
TripleSystem skew_element_twist(const InvolutiveAlgebra& a, const Vec& f);

/// The algebra-with-automorphism attached to a left-unital Kantor triple
/// system:
///   conj(x) = 2x - xee,
///   x . y   = (conj x) e y - (conj x) sigma(conj y) e + y e x.
/// Everything is re-verified post hoc: the algebra is structurable, sigma
/// is an involutive algebra automorphism, and {x sigma(y) z} built from the
/// algebra recovers the original tensor exactly.
struct StructurableResult {
  InvolutiveAlgebra algebra;
  Mat sigma;
};
StructurableResult structurable_of_left_unital(const TripleSystem& ts, const Vec& e);

/// Twist of a left-unital (-1,-1) system by mu.  The result satisfies
/// eex = x = exe, K(e,e) = 2 id, and is unitary and special; all of this is
/// asserted before returning.
TripleSystem mu_normalize(const TripleSystem& ts, const Vec& e);

}  // namespace kantor
