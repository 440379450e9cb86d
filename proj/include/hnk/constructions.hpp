#pragma once

#include "hnk/nary.hpp"

namespace hnk {

enum class RbFlavor { associative, lie, poisson_pair };

/// Even map commuting with the twist and satisfying the weight-lambda
/// Rota-Baxter identity for its flavor. Verified by check_rota_baxter;
/// twisting refuses unverified operators.
struct RotaBaxterOperator {
  LinearMap map;
  Scalar weight;
  RbFlavor flavor = RbFlavor::lie;
};

CheckReport check_rota_baxter(const RotaBaxterOperator &R,
                              const HomAssociativeSuperalgebra &A);
CheckReport check_rota_baxter(const RotaBaxterOperator &R,
                              const HomLieSuperalgebra &L);
CheckReport check_rota_baxter(const RotaBaxterOperator &R,
                              const HomPoissonSuperalgebra &P);

/// Weight-(lambda,lambda') pair: R acts on the product, Rprime on the
/// bracket, the two commute. Storable and checkable; the Poisson twist
/// itself needs the single-operator poisson_pair form (equal weights).
CheckReport check_rota_baxter_pair(const RotaBaxterOperator &R,
                                   const RotaBaxterOperator &Rprime,
                                   const HomPoissonSuperalgebra &P);

/// [x,y]_mu = mu(x,y) - (-1)^{|x||y|} mu(y,x); requires a verified
/// Hom-associative input.
HomLieSuperalgebra commutator_bracket(const HomAssociativeSuperalgebra &A);

/// The commutator bracket paired with mu as a (generally non-commutative)
/// Hom-Poisson structure.
HomPoissonSuperalgebra commutator_poisson(const HomAssociativeSuperalgebra &A);

HomAssociativeSuperalgebra twist_by_rota_baxter(
    const HomAssociativeSuperalgebra &A, const RotaBaxterOperator &R);
HomLieSuperalgebra twist_by_rota_baxter(const HomLieSuperalgebra &L,
                                        const RotaBaxterOperator &R);
HomPoissonSuperalgebra twist_by_rota_baxter(const HomPoissonSuperalgebra &P,
                                            const RotaBaxterOperator &R);

/// For an invertible weight-0 operator, the inverse must be a derivation
/// of the matching flavor; a singular map is an input_error ("singular"),
/// not a failure of the property.
CheckReport check_inverse_derivation(const RotaBaxterOperator &R,
                                     const HomPoissonSuperalgebra &S);

/// The bracket [x1..xn]_phi = sum_{i<j} (-1)^{i+j+1} (-1)^{gamma^X_ij}
/// phi(..^xi..^xj..) [xi,xj] as a bare tensor; no preconditions.
MultiLinearMap induced_bracket_tensor(const HomLieSuperalgebra &L,
                                      const Cochain &phi);

/// Same bracket packaged as an n-ary structure over the same twist;
/// requires a multiplicative base and an even phi.
NaryHomNambuSuperalgebra induced_nary_bracket(const HomLieSuperalgebra &L,
                                              const Cochain &phi);

/// (a) phi(alpha x1, x2..) = phi(x1, x2..); (b) phi([X]_phi, Y) = 0 for
/// all basis tuples X in basis^n, Y in basis^{n-3}. Both vacuous at n=2.
CheckReport check_phi_conditions(const HomLieSuperalgebra &L,
                                 const Cochain &phi);

/// phi(X, mu(y,z)) a(t) = phi(X,y) mu(a(z),t)
///                        + (-1)^{|y||z|} phi(X,z) mu(a(y),t).
CheckReport check_phi_poisson(const HomPoissonSuperalgebra &P,
                              const Cochain &phi);

struct ReducedBracket {
  HomPoissonSuperalgebra algebra;
  /// alpha-fixity and total-parity conditions; the algebra is returned
  /// even when they fail, flagged unverified here.
  CheckReport conditions;
};

/// [x,y]_A = [x,y,a1,..,a_{n-2}] with the slots pinned to A.
ReducedBracket reduce_bracket(const NaryHomNambuPoissonSuperalgebra &N,
                              std::span<const Vector> A);

} // namespace hnk
