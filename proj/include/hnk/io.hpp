#pragma once

#include <map>
#include <nlohmann/json_fwd.hpp>
#include <optional>

#include "hnk/representations.hpp"

namespace hnk {

enum class AlgebraKind {
  hom_associative,
  hom_lie,
  hom_poisson,
  nary_nambu,
  nary_nambu_poisson,
};

std::string kind_to_string(AlgebraKind k);
AlgebraKind kind_from_string(const std::string &s);

/// Validated presentation of an algebra file. Products hold only what
/// the file listed (zero elsewhere); a structure builder fills in zero
/// maps for products a kind needs but the file omits.
struct AlgebraFile {
  AlgebraKind kind = AlgebraKind::hom_lie;
  SuperSpace space;
  std::size_t arity = 2; // bracket arity for the n-ary kinds
  bool commutative = false;
  bool multiplicative = false;
  bool skew_complete = false;
  std::map<std::string, MultiLinearMap> products;
  std::map<std::string, LinearMap> maps;
  std::optional<Cochain> phi;

  std::size_t bracket_arity() const {
    return (kind == AlgebraKind::nary_nambu ||
            kind == AlgebraKind::nary_nambu_poisson)
               ? arity
               : 2;
  }

  /// Named product, or the zero map of the right arity.
  MultiLinearMap product_or_zero(const std::string &name,
                                 std::size_t arity) const;
  /// Named linear map; "alpha" defaults to the identity when absent.
  LinearMap map_or_identity(const std::string &name) const;
  const LinearMap &named_map(const std::string &name) const;

  HomAssociativeSuperalgebra as_hom_associative() const;
  HomLieSuperalgebra as_hom_lie() const;
  HomPoissonSuperalgebra as_hom_poisson() const;
  NaryHomNambuSuperalgebra as_nary() const;
  NaryHomNambuPoissonSuperalgebra as_nary_poisson() const;
};

AlgebraFile parse_algebra_json(const nlohmann::json &j,
                               bool force_skew_complete = false);
AlgebraFile parse_algebra_file(const std::string &path,
                               bool force_skew_complete = false);

nlohmann::json algebra_to_json(const AlgebraFile &file);

/// Canonical dump used for digests and the report output.
std::string canonical_dump(const nlohmann::json &j);

/// FNV-1a 64-bit over the canonical serialization.
std::string input_digest(const AlgebraFile &file);

nlohmann::json report_to_json(const CheckReport &r);

/// Standalone cochain file: {"arity": k, "entries": [{args, value}]}.
Cochain parse_cochain_file(const std::string &path, const SuperSpace &space);

/// Standalone linear map file: {"map": {label: {label: scalar}}}.
LinearMap parse_linear_map_file(const std::string &path,
                                const SuperSpace &space);

AlgebraFile algebra_file_from(const HomAssociativeSuperalgebra &A);
AlgebraFile algebra_file_from(const HomLieSuperalgebra &L);
AlgebraFile algebra_file_from(const HomPoissonSuperalgebra &P);
AlgebraFile algebra_file_from(const NaryHomNambuSuperalgebra &N);
AlgebraFile algebra_file_from(const NaryHomNambuPoissonSuperalgebra &P);

} // namespace hnk
