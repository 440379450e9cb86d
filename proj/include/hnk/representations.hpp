#pragma once

#include <optional>

#include "hnk/constructions.hpp"

namespace hnk {

/// Module space with its own even twist.
struct HomModule {
  SuperSpace space;
  LinearMap alpha_v;

  HomModule(SuperSpace s, LinearMap av);
};

/// Action of an algebra on a module, one module endomorphism per
/// algebra basis element.
class ActionTensor {
public:
  ActionTensor() = default;
  ActionTensor(SuperSpace algebra, SuperSpace module);

  const SuperSpace &algebra() const { return algebra_; }
  const SuperSpace &module() const { return module_; }

  Matrix &op(std::size_t i) { return ops_[i]; }
  const Matrix &op(std::size_t i) const { return ops_[i]; }

  /// Operator of a general algebra element.
  Matrix apply(const Vector &x) const;

  friend bool operator==(const ActionTensor &a, const ActionTensor &b) {
    return a.algebra_ == b.algebra_ && a.module_ == b.module_ &&
           a.ops_ == b.ops_;
  }

private:
  SuperSpace algebra_, module_;
  std::vector<Matrix> ops_;
};

/// Action of (n-1)-tuples of algebra elements on a module; stored on
/// all tuples, alternation is checked rather than assumed.
class NaryActionTensor {
public:
  NaryActionTensor() = default;
  NaryActionTensor(SuperSpace algebra, SuperSpace module, std::size_t arity);

  const SuperSpace &algebra() const { return algebra_; }
  const SuperSpace &module() const { return module_; }
  std::size_t arity() const { return arity_; }

  Matrix &op(std::span<const std::size_t> idx);
  const Matrix &op(std::span<const std::size_t> idx) const;

  Matrix apply(std::span<const Vector> args) const;

private:
  SuperSpace algebra_, module_;
  std::size_t arity_ = 1;
  std::vector<Matrix> ops_;
};

CheckReport is_even(const ActionTensor &t, const std::string &name);
CheckReport is_even(const NaryActionTensor &t, const std::string &name);
CheckReport check_alternating(const NaryActionTensor &t,
                              const std::string &name);

/// Module actions for the binary structures; eta acts for the product,
/// rho for the bracket. Either may be absent when unused.
struct BinaryRepresentation {
  HomModule module;
  std::optional<ActionTensor> eta;
  std::optional<ActionTensor> rho;
};

/// Module actions for the n-ary structures.
struct NaryRepresentation {
  HomModule module;
  NaryActionTensor rho;
  std::optional<ActionTensor> eta;
};

/// eta(mu(x,y)) a_V = eta(a(x)) eta(y) and its graded symmetry.
CheckReport check_rep_assoc(const HomAssociativeSuperalgebra &A,
                            const BinaryRepresentation &rep);

/// rho([x,y]) a_V = rho(a(x)) rho(y) - (-1)^{|x||y|} rho(a(y)) rho(x).
CheckReport check_rep_lie(const HomLieSuperalgebra &L,
                          const BinaryRepresentation &rep);

/// Both actions plus the two mixed compatibility identities.
CheckReport check_rep_poisson(const HomPoissonSuperalgebra &P,
                              const BinaryRepresentation &rep);

CheckReport check_rep_n_hom_lie(const NaryHomNambuSuperalgebra &N,
                                const NaryRepresentation &rep);

CheckReport check_rep_nary_poisson(const NaryHomNambuPoissonSuperalgebra &P,
                                   const NaryRepresentation &rep);

/// Semidirect structures on the direct sum; the structural check of the
/// output passes exactly when the representation check does.
HomAssociativeSuperalgebra semidirect(const HomAssociativeSuperalgebra &A,
                                      const BinaryRepresentation &rep);
HomLieSuperalgebra semidirect(const HomLieSuperalgebra &L,
                              const BinaryRepresentation &rep);
HomPoissonSuperalgebra semidirect(const HomPoissonSuperalgebra &P,
                                  const BinaryRepresentation &rep);
NaryHomNambuSuperalgebra semidirect(const NaryHomNambuSuperalgebra &N,
                                    const NaryRepresentation &rep);
NaryHomNambuPoissonSuperalgebra
semidirect(const NaryHomNambuPoissonSuperalgebra &P,
           const NaryRepresentation &rep);

struct InducedRep {
  NaryRepresentation rep;
  /// Verdict of check_phi_conditions on the base; the representation is
  /// built regardless and is unverified when this fails.
  CheckReport conditions;
};

/// rho_phi(x1..x_{n-1}) = sum_i (-1)^{n-i-1} (-1)^{|x_i||X|_{i+1}}
///                        phi(x1..^xi..x_{n-1}) rho(x_i),
/// with eta carried over unchanged.
InducedRep induced_rep(const HomPoissonSuperalgebra &P,
                       const BinaryRepresentation &rep, const Cochain &phi);

} // namespace hnk
