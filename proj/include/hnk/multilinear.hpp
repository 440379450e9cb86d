#pragma once

#include <span>

#include "hnk/grading.hpp"
#include "hnk/report.hpp"

namespace hnk {

/// Arity-k map given by structure constants c[i1..ik][j], meaning
/// map(e_{i1},..,e_{ik}) = sum_j c[i1..ik][j] e_j. Stored dense;
/// constants default to zero.
class MultiLinearMap {
public:
  MultiLinearMap() = default;
  MultiLinearMap(SuperSpace space, std::size_t arity);

  static MultiLinearMap zero(const SuperSpace &space, std::size_t arity) {
    return MultiLinearMap(space, arity);
  }

  const SuperSpace &space() const { return space_; }
  std::size_t arity() const { return arity_; }

  const Scalar &constant(std::span<const std::size_t> idx,
                         std::size_t j) const;
  Scalar &constant(std::span<const std::size_t> idx, std::size_t j);

  /// Value on a basis tuple.
  Vector value_at(std::span<const std::size_t> idx) const;
  void set_value(std::span<const std::size_t> idx, const Vector &v);
  bool has_nonzero_value(std::span<const std::size_t> idx) const;

  friend bool operator==(const MultiLinearMap &a, const MultiLinearMap &b) {
    return a.space_ == b.space_ && a.arity_ == b.arity_ && a.c_ == b.c_;
  }

private:
  std::size_t row_offset(std::span<const std::size_t> idx) const;

  SuperSpace space_;
  std::size_t arity_ = 0;
  std::vector<Scalar> c_;
};

/// Multilinear extension of the structure constants; exact.
Vector eval_multilinear(const MultiLinearMap &m,
                        std::span<const Vector> args);

/// Pass iff every nonzero constant lands in the component whose parity
/// is the sum of the input parities.
CheckReport is_even(const MultiLinearMap &m);

/// Fills every unlisted tuple from a listed permutation of it using the
/// graded alternation sign; listed entries are never modified, so the
/// completion is idempotent. `listed` flags the tuples present in the
/// source presentation (by flat index).
MultiLinearMap skew_complete(const MultiLinearMap &m,
                             const std::vector<bool> &listed);

} // namespace hnk
