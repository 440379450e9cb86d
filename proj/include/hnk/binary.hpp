#pragma once

#include "hnk/cochain.hpp"
#include "hnk/linear_map.hpp"
#include "hnk/multilinear.hpp"
#include "hnk/report.hpp"

namespace hnk {

/// Product mu with twisted associativity mu(mu(x,y),a(z)) = mu(a(x),mu(y,z)).
struct HomAssociativeSuperalgebra {
  SuperSpace space;
  MultiLinearMap mu;    // arity 2
  LinearMap alpha;
  bool commutative = false;

  HomAssociativeSuperalgebra(SuperSpace s, MultiLinearMap m, LinearMap a,
                             bool comm = false);
};

/// Super-skew bracket with the twisted super-Jacobi identity.
struct HomLieSuperalgebra {
  SuperSpace space;
  MultiLinearMap bracket; // arity 2
  LinearMap alpha;

  HomLieSuperalgebra(SuperSpace s, MultiLinearMap b, LinearMap a);
};

/// Bracket and product tied by the twisted Leibniz identity.
struct HomPoissonSuperalgebra {
  SuperSpace space;
  MultiLinearMap bracket;
  MultiLinearMap mu;
  LinearMap alpha;
  bool commutative = false;

  HomPoissonSuperalgebra(SuperSpace s, MultiLinearMap b, MultiLinearMap m,
                         LinearMap a, bool comm = false);

  HomLieSuperalgebra lie_part() const {
    return HomLieSuperalgebra(space, bracket, alpha);
  }
  HomAssociativeSuperalgebra associative_part() const {
    return HomAssociativeSuperalgebra(space, mu, alpha, commutative);
  }
};

/// mu(mu(x,y),a(z)) - mu(a(x),mu(y,z)).
Vector hom_associator(const HomAssociativeSuperalgebra &A, const Vector &x,
                      const Vector &y, const Vector &z);

CheckReport check_hom_associative(const HomAssociativeSuperalgebra &A);
CheckReport check_hom_lie(const HomLieSuperalgebra &L);

enum class LeibnizForm {
  primary, // [a(x),mu(y,z)] = mu([x,y],a(z)) + (-1)^{|x||y|} mu(a(y),[x,z])
  variant, // [a(x),mu(y,z)] = mu([x,y],a(z)) + (-1)^{|y||z|} mu([x,z],a(y))
};

CheckReport check_hom_leibniz_form(const HomPoissonSuperalgebra &P,
                                   LeibnizForm form);

/// Primary form; for a claimed-commutative product the variant form must
/// agree with it and the disagreement is itself a failure.
CheckReport check_hom_leibniz(const HomPoissonSuperalgebra &P);

/// Aggregates the Hom-Lie, Hom-associative and Hom-Leibniz checks.
CheckReport check_hom_poisson(const HomPoissonSuperalgebra &P);

/// a(op(x1..xk)) = op(a(x1)..a(xk)) for one product.
CheckReport multiplicativity_scan(const LinearMap &alpha,
                                  const MultiLinearMap &op,
                                  const std::string &op_name);

CheckReport check_multiplicative(const HomAssociativeSuperalgebra &A);
CheckReport check_multiplicative(const HomLieSuperalgebra &L);
CheckReport check_multiplicative(const HomPoissonSuperalgebra &P);

/// f intertwines brackets and products of A and B; a strict morphism
/// (weak = false) additionally satisfies f.alpha = beta.f.
CheckReport check_morphism(const LinearMap &f, const HomPoissonSuperalgebra &A,
                           const HomPoissonSuperalgebra &B, bool weak);

enum class DerivationLaw { product_only, bracket_only, both };

/// D.alpha = alpha.D plus the graded Leibniz law of D (of the supplied
/// parity) over the selected products.
CheckReport check_derivation(const LinearMap &D,
                             const HomPoissonSuperalgebra &P,
                             Parity parity_of_D,
                             DerivationLaw law = DerivationLaw::both);

/// ad_x : y -> [x,y]; x must be homogeneous.
LinearMap adjoint(const Vector &x, const HomLieSuperalgebra &S);

} // namespace hnk
