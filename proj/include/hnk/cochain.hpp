#pragma once

#include <span>

#include "hnk/grading.hpp"
#include "hnk/report.hpp"

namespace hnk {

/// Scalar-valued arity-k functional given on basis tuples; arity 0 is a
/// single scalar. Used to induce n-ary brackets (k = n-2).
class Cochain {
public:
  Cochain() = default;
  Cochain(SuperSpace space, std::size_t arity);

  const SuperSpace &space() const { return space_; }
  std::size_t arity() const { return arity_; }

  const Scalar &value_at(std::span<const std::size_t> idx) const;
  Scalar &value_at(std::span<const std::size_t> idx);

  /// Multilinear extension.
  Scalar eval(std::span<const Vector> args) const;

  friend bool operator==(const Cochain &a, const Cochain &b) {
    return a.space_ == b.space_ && a.arity_ == b.arity_ && a.v_ == b.v_;
  }

private:
  SuperSpace space_;
  std::size_t arity_ = 0;
  std::vector<Scalar> v_;
};

/// Pass iff the cochain vanishes on every tuple of odd total parity.
CheckReport is_even(const Cochain &phi);

/// Evenness plus graded alternation under adjacent transpositions.
CheckReport check_cochain(const Cochain &phi);

} // namespace hnk
