#include "hnk/linear_map.hpp"

namespace hnk {

LinearMap::LinearMap(SuperSpace domain, SuperSpace codomain, Matrix entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      entries_(std::move(entries)) {
  if (entries_.rows() != codomain_.dim() || entries_.cols() != domain_.dim())
    throw input_error("LinearMap: entry matrix shape mismatch");
}

LinearMap LinearMap::endo(const SuperSpace &space, Matrix entries) {
  return LinearMap(space, space, std::move(entries));
}

LinearMap LinearMap::identity(const SuperSpace &space) {
  return endo(space, Matrix::identity(space.dim()));
}

LinearMap LinearMap::zero(const SuperSpace &domain,
                          const SuperSpace &codomain) {
  return LinearMap(domain, codomain, Matrix(codomain.dim(), domain.dim()));
}

LinearMap LinearMap::diagonal(const SuperSpace &space,
                              const std::vector<Scalar> &diag) {
  if (diag.size() != space.dim())
    throw input_error("LinearMap::diagonal: wrong number of entries");
  Matrix m(space.dim(), space.dim());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m.at(i, i) = diag[i];
  return endo(space, std::move(m));
}

LinearMap LinearMap::compose(const LinearMap &other) const {
  if (!(other.codomain_ == domain_))
    throw input_error("LinearMap::compose: space mismatch");
  return LinearMap(other.domain_, codomain_, entries_ * other.entries_);
}

std::optional<LinearMap> LinearMap::inverse() const {
  if (!(domain_ == codomain_))
    return std::nullopt;
  auto inv = entries_.inverse();
  if (!inv)
    return std::nullopt;
  return LinearMap(codomain_, domain_, std::move(*inv));
}

CheckReport maps_commute(const LinearMap &f, const LinearMap &g) {
  if (!(f.domain() == f.codomain()) || !(g.domain() == g.codomain()) ||
      !(f.domain() == g.domain()))
    throw input_error("maps_commute: dimension mismatch");
  const Matrix fg = f.entries() * g.entries();
  const Matrix gf = g.entries() * f.entries();
  if (fg == gf)
    return CheckReport::ok("maps-commute");
  const SuperSpace &space = f.domain();
  for (std::size_t i = 0; i < space.dim(); ++i) {
    const Vector a = fg.column(i), b = gf.column(i);
    if (!(a == b))
      return CheckReport::fail("maps-commute", {space.label(i)},
                               format_vector(space, a),
                               format_vector(space, b));
  }
  return CheckReport::ok("maps-commute"); // unreachable
}

CheckReport is_even(const LinearMap &f) {
  const SuperSpace &dom = f.domain();
  const SuperSpace &cod = f.codomain();
  for (std::size_t i = 0; i < dom.dim(); ++i)
    for (std::size_t r = 0; r < cod.dim(); ++r)
      if (f.entries().at(r, i) != 0 && !(cod.parity(r) == dom.parity(i)))
        return CheckReport::fail(
            "even-linear-map", {dom.label(i)}, format_vector(cod, f.column(i)),
            "component of parity " + std::to_string(dom.parity(i).value()),
            "entry at " + cod.label(r) + " crosses parity");
  return CheckReport::ok("even-linear-map");
}

} // namespace hnk
