#pragma once

#include "hnk/binary.hpp"

namespace hnk {

/// Arity-n bracket with a family of n-1 twisting maps. Identity checks
/// are implemented for the uniform family (all maps equal); a structure
/// with genuinely distinct maps is storable but rejected by the checks
/// with an explicit diagnostic.
struct NaryHomNambuSuperalgebra {
  SuperSpace space;
  std::size_t n = 2;
  MultiLinearMap bracket; // arity n
  std::vector<LinearMap> alphas;
  bool multiplicative = false;

  NaryHomNambuSuperalgebra(SuperSpace s, std::size_t arity, MultiLinearMap b,
                           std::vector<LinearMap> alpha_family,
                           bool multiplicative_claim = false);

  /// Convenience constructor for the uniform family.
  NaryHomNambuSuperalgebra(SuperSpace s, std::size_t arity, MultiLinearMap b,
                           const LinearMap &alpha,
                           bool multiplicative_claim = false);

  bool uniform() const;
  /// The common twisting map; input_error when the family is not uniform.
  const LinearMap &alpha() const;
};

/// n-ary bracket plus a binary product tied by the n-ary Leibniz identity.
struct NaryHomNambuPoissonSuperalgebra {
  NaryHomNambuSuperalgebra base;
  MultiLinearMap mu;
  bool commutative = false;

  NaryHomNambuPoissonSuperalgebra(NaryHomNambuSuperalgebra b, MultiLinearMap m,
                                  bool comm = false);

  HomAssociativeSuperalgebra associative_part() const {
    return HomAssociativeSuperalgebra(base.space, mu, base.alpha(),
                                      commutative);
  }
};

/// [a(x1)..a(x_{n-1}), [y1..yn]] =
///   sum_i (-1)^{|X||Y|^{i-1}} [a(y1)..a(y_{i-1}), [x1..x_{n-1},yi],
///                              a(y_{i+1})..a(yn)].
CheckReport check_nambu_identity(const NaryHomNambuSuperalgebra &N);

/// Adjacent transpositions negate with the Koszul sign; the general
/// transposition form is verified as a consequence.
CheckReport check_nary_skew(const NaryHomNambuSuperalgebra &N);

enum class NaryLeibnizForm { primary, variant };

CheckReport check_nary_hom_leibniz_form(const NaryHomNambuPoissonSuperalgebra &P,
                                        NaryLeibnizForm form);

/// Primary form; for a claimed-commutative product the variant form
/// must agree with it.
CheckReport check_nary_hom_leibniz(const NaryHomNambuPoissonSuperalgebra &P);

/// Aggregates skew, Nambu, Hom-associative and n-ary Leibniz checks.
CheckReport check_nary_poisson(const NaryHomNambuPoissonSuperalgebra &P);

CheckReport check_multiplicative(const NaryHomNambuSuperalgebra &N);
CheckReport check_multiplicative(const NaryHomNambuPoissonSuperalgebra &P);

/// ad_X : y -> [x1,..,x_{n-1},y]; entries must be homogeneous.
LinearMap adjoint_nary(std::span<const Vector> X,
                       const NaryHomNambuSuperalgebra &N);

} // namespace hnk
