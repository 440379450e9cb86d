#include "hnk/multilinear.hpp"

#include <map>

namespace hnk {

MultiLinearMap::MultiLinearMap(SuperSpace space, std::size_t arity)
    : space_(std::move(space)), arity_(arity) {
  if (arity_ == 0)
    throw input_error("MultiLinearMap: arity must be positive");
  std::size_t n = space_.dim();
  std::size_t rows = 1;
  for (std::size_t i = 0; i < arity_; ++i)
    rows *= n;
  c_.assign(rows * n, Scalar(0));
}

std::size_t MultiLinearMap::row_offset(std::span<const std::size_t> idx) const {
  if (idx.size() != arity_)
    throw input_error("MultiLinearMap: arity mismatch");
  for (auto i : idx)
    if (i >= space_.dim())
      throw input_error("MultiLinearMap: basis index out of range");
  return flat_index(idx, space_.dim()) * space_.dim();
}

const Scalar &MultiLinearMap::constant(std::span<const std::size_t> idx,
                                       std::size_t j) const {
  return c_[row_offset(idx) + j];
}

Scalar &MultiLinearMap::constant(std::span<const std::size_t> idx,
                                 std::size_t j) {
  return c_[row_offset(idx) + j];
}

Vector MultiLinearMap::value_at(std::span<const std::size_t> idx) const {
  const std::size_t off = row_offset(idx);
  Vector v(space_.dim());
  for (std::size_t j = 0; j < space_.dim(); ++j)
    v[j] = c_[off + j];
  return v;
}

void MultiLinearMap::set_value(std::span<const std::size_t> idx,
                               const Vector &v) {
  if (v.dim() != space_.dim())
    throw input_error("MultiLinearMap: value dimension mismatch");
  const std::size_t off = row_offset(idx);
  for (std::size_t j = 0; j < space_.dim(); ++j)
    c_[off + j] = v[j];
}

bool MultiLinearMap::has_nonzero_value(std::span<const std::size_t> idx) const {
  const std::size_t off = row_offset(idx);
  for (std::size_t j = 0; j < space_.dim(); ++j)
    if (c_[off + j] != 0)
      return true;
  return false;
}

Vector eval_multilinear(const MultiLinearMap &m, std::span<const Vector> args) {
  if (args.size() != m.arity())
    throw input_error("eval_multilinear: arity mismatch");
  const std::size_t dim = m.space().dim();
  for (const auto &a : args)
    if (a.dim() != dim)
      throw input_error("eval_multilinear: space mismatch");

  Vector out(dim);
  std::vector<std::size_t> idx(m.arity());
  Scalar coeff;
  // expand slot by slot, skipping zero coefficients
  auto expand = [&](auto &&self, std::size_t slot, const Scalar &acc) -> void {
    if (slot == m.arity()) {
      Vector row = m.value_at(idx);
      row *= acc;
      out += row;
      return;
    }
    for (std::size_t i = 0; i < dim; ++i) {
      const Scalar &x = args[slot][i];
      if (x == 0)
        continue;
      idx[slot] = i;
      self(self, slot + 1, Scalar(acc * x));
    }
  };
  expand(expand, 0, Scalar(1));
  return out;
}

CheckReport is_even(const MultiLinearMap &m) {
  const SuperSpace &space = m.space();
  CheckReport out = CheckReport::ok("even-multilinear-map");
  for_each_tuple(space.dim(), m.arity(), [&](std::span<const std::size_t> t) {
    const Parity want = space.tuple_parity(t);
    for (std::size_t j = 0; j < space.dim(); ++j) {
      if (m.constant(t, j) == 0 || space.parity(j) == want)
        continue;
      std::vector<std::string> w;
      for (auto i : t)
        w.push_back(space.label(i));
      out = CheckReport::fail(
          "even-multilinear-map", std::move(w),
          format_vector(space, m.value_at(t)),
          "component of parity " + std::to_string(want.value()),
          "entry at " + space.label(j) + " crosses parity");
      return false;
    }
    return true;
  });
  return out;
}

namespace {

struct CanonicalForm {
  std::size_t flat;   // flat index of the sorted tuple
  int factor;         // +1/-1 relating value(tuple) = factor * value(sorted)
  bool forced_zero;   // repeated even-parity index
};

CanonicalForm canonicalize(const SuperSpace &space,
                           std::span<const std::size_t> t) {
  std::vector<std::size_t> v(t.begin(), t.end());
  int factor = 1;
  bool sorted = false;
  while (!sorted) { // bubble sort, tracking graded swap signs
    sorted = true;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      if (v[k] > v[k + 1]) {
        const Parity a = space.parity(v[k]), b = space.parity(v[k + 1]);
        factor *= -sign_of(a * b);
        std::swap(v[k], v[k + 1]);
        sorted = false;
      }
    }
  }
  bool forced = false;
  for (std::size_t k = 0; k + 1 < v.size(); ++k)
    if (v[k] == v[k + 1] && !space.parity(v[k]).odd())
      forced = true;
  return {flat_index(v, space.dim()), factor, forced};
}

} // namespace

MultiLinearMap skew_complete(const MultiLinearMap &m,
                             const std::vector<bool> &listed) {
  const SuperSpace &space = m.space();
  const std::size_t dim = space.dim();
  std::size_t rows = 1;
  for (std::size_t i = 0; i < m.arity(); ++i)
    rows *= dim;
  if (listed.size() != rows)
    throw input_error("skew_complete: listed flags shape mismatch");

  // first listed tuple of each permutation class, with its value pulled
  // back to the sorted representative
  std::map<std::size_t, Vector> canonical_value;
  for_each_tuple(dim, m.arity(), [&](std::span<const std::size_t> t) {
    const std::size_t f = flat_index(t, dim);
    if (!listed[f])
      return true;
    const CanonicalForm cf = canonicalize(space, t);
    if (!canonical_value.count(cf.flat)) {
      Vector v = m.value_at(t);
      if (cf.factor < 0)
        v *= Scalar(-1);
      canonical_value.emplace(cf.flat, std::move(v));
    }
    return true;
  });

  MultiLinearMap out = m;
  for_each_tuple(dim, m.arity(), [&](std::span<const std::size_t> t) {
    const std::size_t f = flat_index(t, dim);
    if (listed[f])
      return true;
    const CanonicalForm cf = canonicalize(space, t);
    if (cf.forced_zero)
      return true;
    auto it = canonical_value.find(cf.flat);
    if (it == canonical_value.end())
      return true;
    Vector v = it->second;
    if (cf.factor < 0)
      v *= Scalar(-1);
    out.set_value(t, v);
    return true;
  });
  return out;
}

} // namespace hnk
