#include "hnk/cochain.hpp"

namespace hnk {

Cochain::Cochain(SuperSpace space, std::size_t arity)
    : space_(std::move(space)), arity_(arity) {
  std::size_t rows = 1;
  for (std::size_t i = 0; i < arity_; ++i)
    rows *= space_.dim();
  v_.assign(rows, Scalar(0));
}

const Scalar &Cochain::value_at(std::span<const std::size_t> idx) const {
  if (idx.size() != arity_)
    throw input_error("Cochain: arity mismatch");
  return v_[flat_index(idx, space_.dim())];
}

Scalar &Cochain::value_at(std::span<const std::size_t> idx) {
  if (idx.size() != arity_)
    throw input_error("Cochain: arity mismatch");
  return v_[flat_index(idx, space_.dim())];
}

Scalar Cochain::eval(std::span<const Vector> args) const {
  if (args.size() != arity_)
    throw input_error("Cochain: arity mismatch");
  const std::size_t dim = space_.dim();
  for (const auto &a : args)
    if (a.dim() != dim)
      throw input_error("Cochain: space mismatch");
  Scalar out(0);
  std::vector<std::size_t> idx(arity_);
  auto expand = [&](auto &&self, std::size_t slot, const Scalar &acc) -> void {
    if (slot == arity_) {
      out += acc * value_at(idx);
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

CheckReport is_even(const Cochain &phi) {
  const SuperSpace &space = phi.space();
  CheckReport out = CheckReport::ok("even-cochain");
  for_each_tuple(space.dim(), phi.arity(),
                 [&](std::span<const std::size_t> t) {
                   if (!space.tuple_parity(t).odd() ||
                       phi.value_at(t) == 0)
                     return true;
                   std::vector<std::string> w;
                   for (auto i : t)
                     w.push_back(space.label(i));
                   out = CheckReport::fail("even-cochain", std::move(w),
                                           scalar_to_string(phi.value_at(t)),
                                           "0");
                   return false;
                 });
  return out;
}

CheckReport check_cochain(const Cochain &phi) {
  std::vector<CheckReport> parts;
  parts.push_back(is_even(phi));

  const SuperSpace &space = phi.space();
  CheckReport alt = CheckReport::ok("cochain-alternating");
  if (phi.arity() >= 2) {
    for_each_tuple(space.dim(), phi.arity(),
                   [&](std::span<const std::size_t> t) {
                     for (std::size_t s = 0; s + 1 < phi.arity(); ++s) {
                       std::vector<std::size_t> sw(t.begin(), t.end());
                       std::swap(sw[s], sw[s + 1]);
                       const Parity pq =
                           space.parity(t[s]) * space.parity(t[s + 1]);
                       const Scalar want =
                           Scalar(-sign_of(pq)) * phi.value_at(sw);
                       if (phi.value_at(t) == want)
                         continue;
                       std::vector<std::string> w;
                       for (auto i : t)
                         w.push_back(space.label(i));
                       alt = CheckReport::fail(
                           "cochain-alternating", std::move(w),
                           scalar_to_string(phi.value_at(t)),
                           scalar_to_string(want),
                           "swap of slots " + std::to_string(s + 1) + "," +
                               std::to_string(s + 2));
                       return false;
                     }
                     return true;
                   });
  }
  parts.push_back(std::move(alt));
  return CheckReport::aggregate("cochain", std::move(parts));
}

} // namespace hnk
