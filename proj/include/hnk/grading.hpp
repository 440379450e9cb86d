#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hnk/error.hpp"
#include "hnk/scalar.hpp"

namespace hnk {

/// Z2 degree of a homogeneous element; addition is mod 2.
struct Parity {
  std::uint8_t v = 0;

  constexpr Parity() = default;
  constexpr explicit Parity(int x) : v(static_cast<std::uint8_t>(x & 1)) {}

  constexpr bool odd() const { return v != 0; }
  constexpr int value() const { return v; }

  friend constexpr Parity operator+(Parity a, Parity b) {
    return Parity((a.v + b.v) & 1);
  }
  friend constexpr Parity operator*(Parity a, Parity b) {
    return Parity(a.v & b.v);
  }
  friend constexpr bool operator==(Parity a, Parity b) { return a.v == b.v; }
};

/// (-1)^p as an int factor.
constexpr int sign_of(Parity p) { return p.odd() ? -1 : 1; }

/// Finite ordered homogeneous basis with one parity per element.
class SuperSpace {
public:
  SuperSpace() = default;
  SuperSpace(std::vector<std::string> labels, std::vector<Parity> parities);

  std::size_t dim() const { return labels_.size(); }
  const std::string &label(std::size_t i) const { return labels_[i]; }
  Parity parity(std::size_t i) const { return parities_[i]; }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::vector<Parity> &parities() const { return parities_; }

  /// Index of a basis label, or input_error if unknown.
  std::size_t index_of(const std::string &label) const;
  std::optional<std::size_t> find(const std::string &label) const;

  Parity tuple_parity(std::span<const std::size_t> idx) const;

  friend bool operator==(const SuperSpace &a, const SuperSpace &b) {
    return a.labels_ == b.labels_ && parities_equal(a.parities_, b.parities_);
  }

private:
  static bool parities_equal(const std::vector<Parity> &a,
                             const std::vector<Parity> &b);

  std::vector<std::string> labels_;
  std::vector<Parity> parities_;
};

/// Coefficient vector over the basis of some SuperSpace.
struct Vector {
  std::vector<Scalar> c;

  Vector() = default;
  explicit Vector(std::size_t dim) : c(dim) {}

  std::size_t dim() const { return c.size(); }
  bool is_zero() const;

  Scalar &operator[](std::size_t i) { return c[i]; }
  const Scalar &operator[](std::size_t i) const { return c[i]; }

  Vector &operator+=(const Vector &o);
  Vector &operator-=(const Vector &o);
  Vector &operator*=(const Scalar &s);

  friend Vector operator+(Vector a, const Vector &b) { return a += b; }
  friend Vector operator-(Vector a, const Vector &b) { return a -= b; }
  friend Vector operator*(const Scalar &s, Vector v) { return v *= s; }
  friend bool operator==(const Vector &a, const Vector &b) {
    return a.c == b.c;
  }
};

Vector basis_vector(const SuperSpace &space, std::size_t i);

/// Parity of a vector whose nonzero coordinates all share one parity;
/// nullopt when mixed. The zero vector reports even.
std::optional<Parity> homogeneous_parity(const SuperSpace &space,
                                         const Vector &v);

/// Renders "2*e1 - 1/2*e3", or "0".
std::string format_vector(const SuperSpace &space, const Vector &v);

/// Parity sums over a fixed tuple of homogeneous elements. Indices are
/// 1-based to match the usual summation bounds; out-of-range bounds of
/// an empty range are fine, anything else is an input_error.
class ParityBook {
public:
  explicit ParityBook(std::vector<Parity> parities)
      : ps_(std::move(parities)) {}

  ParityBook(const SuperSpace &space, std::span<const std::size_t> idx);

  std::size_t size() const { return ps_.size(); }
  Parity at(std::size_t i) const; // 1-based

  /// |X| = sum of all parities.
  Parity total() const;
  /// |X|_i^j = sum over k in [i, j]; empty when i > j.
  Parity range(std::size_t i, std::size_t j) const;
  /// |X|^{i-1} = sum over k in [1, i-1].
  Parity prefix(std::size_t i) const;
  /// gamma^X_{ij} = |X|_{j+1}^{n} (|x_i|+|x_j|) + |x_i| |X|_{i+1}^{j-1}.
  Parity gamma(std::size_t i, std::size_t j) const;

private:
  std::vector<Parity> ps_;
};

struct SignTotal {};
struct SignRange {
  std::size_t i, j;
};
struct SignPrefix {
  std::size_t i;
};
struct SignGamma {
  std::size_t i, j;
};
using SignKind = std::variant<SignTotal, SignRange, SignPrefix, SignGamma>;

Parity koszul_sign(const ParityBook &book, const SignKind &kind);

/// Visits every index tuple of the given length over {0,..,dim-1} in
/// lexicographic order; the visitor returns false to stop early.
/// Returns false iff some visit stopped the scan.
bool for_each_tuple(std::size_t dim, std::size_t length,
                    const std::function<bool(std::span<const std::size_t>)> &f);

std::size_t flat_index(std::span<const std::size_t> idx, std::size_t dim);

} // namespace hnk
