#pragma once

#include "kantor/structurable.hpp"
#include "kantor/triple.hpp"

namespace kantor {

/// The ground field as a one-dimensional algebra with trivial involution.
InvolutiveAlgebra make_unit_field();

/// F x F with componentwise product and the exchange involution.
InvolutiveAlgebra make_split_pair();

/// Rational quaternions on the basis (1, i, j, k) with the standard
/// conjugation.
InvolutiveAlgebra make_quat();

/// 2x2 matrices on the basis (E11, E12, E21, E22) with transposition.
InvolutiveAlgebra make_mat2_transpose();

/// Companion involutive automorphisms for the corpus algebras.
Mat swap_map();            // split-pair: exchange of the two components
Mat quat_conj_i();         // quat: x -> i x i^{-1}, i.e. diag(1, 1, -1, -1)
Mat mat2_conj_diag();      // mat2: X -> D X D for D = diag(1, -1)

/// One-dimensional system xyz = xyz over F, used with signs (-1,-1).
TripleSystem make_scalar_fkts();

/// F x F with componentwise scalar product, twisted by the swap:
/// {xyz} = x . swap(y) . z.  A (-1,-1) system with left unit (1,1).
TripleSystem make_swap_fkts();

/// Componentwise F x F system without the twist (the mu-normalization
/// target of swap-fkts).
TripleSystem make_componentwise_pair();

/// xyz = (x|y) z for the standard rank-2 symmetric bilinear form on F^2.
/// A left-unital generalized Jordan triple system that is not Kantor.
TripleSystem make_bilinear_form_system();

}  // namespace kantor
