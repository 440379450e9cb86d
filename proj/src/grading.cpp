#include "hnk/grading.hpp"

#include <algorithm>
#include <set>

namespace hnk {

SuperSpace::SuperSpace(std::vector<std::string> labels,
                       std::vector<Parity> parities)
    : labels_(std::move(labels)), parities_(std::move(parities)) {
  if (labels_.empty())
    throw input_error("SuperSpace: dimension must be at least 1");
  if (labels_.size() != parities_.size())
    throw input_error("SuperSpace: labels and parities differ in length");
  std::set<std::string> seen;
  for (const auto &l : labels_)
    if (!seen.insert(l).second)
      throw input_error("SuperSpace: duplicate basis label '" + l + "'");
}

bool SuperSpace::parities_equal(const std::vector<Parity> &a,
                                const std::vector<Parity> &b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(),
                    [](Parity x, Parity y) { return x == y; });
}

std::size_t SuperSpace::index_of(const std::string &label) const {
  if (auto i = find(label))
    return *i;
  throw input_error("unknown basis label '" + label + "'");
}

std::optional<std::size_t> SuperSpace::find(const std::string &label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label)
      return i;
  return std::nullopt;
}

Parity SuperSpace::tuple_parity(std::span<const std::size_t> idx) const {
  Parity p;
  for (auto i : idx)
    p = p + parity(i);
  return p;
}

bool Vector::is_zero() const {
  return std::all_of(c.begin(), c.end(),
                     [](const Scalar &s) { return s == 0; });
}

Vector &Vector::operator+=(const Vector &o) {
  if (c.size() != o.c.size())
    throw input_error("vector dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] += o.c[i];
  return *this;
}

Vector &Vector::operator-=(const Vector &o) {
  if (c.size() != o.c.size())
    throw input_error("vector dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] -= o.c[i];
  return *this;
}

Vector &Vector::operator*=(const Scalar &s) {
  for (auto &x : c)
    x *= s;
  return *this;
}

Vector basis_vector(const SuperSpace &space, std::size_t i) {
  Vector v(space.dim());
  v[i] = 1;
  return v;
}

std::optional<Parity> homogeneous_parity(const SuperSpace &space,
                                         const Vector &v) {
  std::optional<Parity> p;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] == 0)
      continue;
    if (!p)
      p = space.parity(i);
    else if (!(*p == space.parity(i)))
      return std::nullopt;
  }
  return p ? p : std::optional<Parity>(Parity(0));
}

std::string format_vector(const SuperSpace &space, const Vector &v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const Scalar &s = v[i];
    if (s == 0)
      continue;
    if (out.empty()) {
      if (s == 1)
        out += space.label(i);
      else if (s == -1)
        out += "-" + space.label(i);
      else
        out += scalar_to_string(s) + "*" + space.label(i);
    } else {
      const Scalar a = s < 0 ? Scalar(-s) : s;
      out += s < 0 ? " - " : " + ";
      if (a == 1)
        out += space.label(i);
      else
        out += scalar_to_string(a) + "*" + space.label(i);
    }
  }
  return out.empty() ? "0" : out;
}

ParityBook::ParityBook(const SuperSpace &space,
                       std::span<const std::size_t> idx) {
  ps_.reserve(idx.size());
  for (auto i : idx)
    ps_.push_back(space.parity(i));
}

Parity ParityBook::at(std::size_t i) const {
  if (i < 1 || i > ps_.size())
    throw input_error("ParityBook: index out of range");
  return ps_[i - 1];
}

Parity ParityBook::total() const {
  Parity p;
  for (auto q : ps_)
    p = p + q;
  return p;
}

Parity ParityBook::range(std::size_t i, std::size_t j) const {
  if (i > j)
    return Parity(0); // empty sum
  if (i < 1 || j > ps_.size())
    throw input_error("ParityBook: range out of bounds");
  Parity p;
  for (std::size_t k = i; k <= j; ++k)
    p = p + ps_[k - 1];
  return p;
}

Parity ParityBook::prefix(std::size_t i) const {
  if (i < 1 || i > ps_.size() + 1)
    throw input_error("ParityBook: prefix index out of bounds");
  return range(1, i - 1);
}

Parity ParityBook::gamma(std::size_t i, std::size_t j) const {
  if (i < 1 || j <= i || j > ps_.size())
    throw input_error("ParityBook: gamma indices out of bounds");
  const std::size_t n = ps_.size();
  const Parity tail = (j + 1 <= n) ? range(j + 1, n) : Parity(0);
  const Parity between = (i + 1 <= j - 1) ? range(i + 1, j - 1) : Parity(0);
  return tail * (at(i) + at(j)) + at(i) * between;
}

Parity koszul_sign(const ParityBook &book, const SignKind &kind) {
  return std::visit(
      [&](const auto &k) -> Parity {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, SignTotal>)
          return book.total();
        else if constexpr (std::is_same_v<T, SignRange>)
          return book.range(k.i, k.j);
        else if constexpr (std::is_same_v<T, SignPrefix>)
          return book.prefix(k.i);
        else
          return book.gamma(k.i, k.j);
      },
      kind);
}

bool for_each_tuple(
    std::size_t dim, std::size_t length,
    const std::function<bool(std::span<const std::size_t>)> &f) {
  std::vector<std::size_t> idx(length, 0);
  while (true) {
    if (!f(std::span<const std::size_t>(idx)))
      return false;
    std::size_t slot = length;
    while (slot > 0) {
      if (++idx[slot - 1] < dim)
        break;
      idx[slot - 1] = 0;
      --slot;
    }
    if (slot == 0)
      return true;
  }
}

std::size_t flat_index(std::span<const std::size_t> idx, std::size_t dim) {
  std::size_t f = 0;
  for (auto i : idx)
    f = f * dim + i;
  return f;
}

} // namespace hnk
