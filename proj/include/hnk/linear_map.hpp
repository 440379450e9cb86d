#pragma once

#include "hnk/grading.hpp"
#include "hnk/matrix.hpp"
#include "hnk/report.hpp"

namespace hnk {

/// Linear map between graded spaces, stored as a codomain-dim by
/// domain-dim matrix of exact rationals. Evenness is a checked
/// property (is_even), not a construction invariant.
class LinearMap {
public:
  LinearMap() = default;
  LinearMap(SuperSpace domain, SuperSpace codomain, Matrix entries);

  /// Endomorphism with the given matrix.
  static LinearMap endo(const SuperSpace &space, Matrix entries);
  static LinearMap identity(const SuperSpace &space);
  static LinearMap zero(const SuperSpace &domain, const SuperSpace &codomain);
  static LinearMap diagonal(const SuperSpace &space,
                            const std::vector<Scalar> &diag);

  const SuperSpace &domain() const { return domain_; }
  const SuperSpace &codomain() const { return codomain_; }
  const Matrix &entries() const { return entries_; }
  Matrix &entries() { return entries_; }

  Vector apply(const Vector &v) const { return entries_.apply(v); }
  Vector column(std::size_t i) const { return entries_.column(i); }

  /// this after other (maps x to this(other(x))).
  LinearMap compose(const LinearMap &other) const;

  std::optional<LinearMap> inverse() const;

  friend bool operator==(const LinearMap &a, const LinearMap &b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
           a.entries_ == b.entries_;
  }

private:
  SuperSpace domain_, codomain_;
  Matrix entries_;
};

/// Pass iff f(g(x)) = g(f(x)) on every basis vector; both must be
/// endomorphisms of the same space.
CheckReport maps_commute(const LinearMap &f, const LinearMap &g);

/// Pass iff each basis vector of parity p maps into the parity-p
/// component only.
CheckReport is_even(const LinearMap &f);

} // namespace hnk
