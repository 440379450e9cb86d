#include "hnk/binary.hpp"

namespace hnk {

namespace {

std::vector<std::string> labels_of(const SuperSpace &space,
                                   std::span<const std::size_t> idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (auto i : idx)
    out.push_back(space.label(i));
  return out;
}

std::vector<Vector> alpha_columns(const LinearMap &alpha) {
  std::vector<Vector> cols;
  cols.reserve(alpha.domain().dim());
  for (std::size_t i = 0; i < alpha.domain().dim(); ++i)
    cols.push_back(alpha.column(i));
  return cols;
}

Vector ev2(const MultiLinearMap &m, const Vector &a, const Vector &b) {
  const Vector args[2] = {a, b};
  return eval_multilinear(m, args);
}

void require_endo(const LinearMap &f, const SuperSpace &space,
                  const char *what) {
  if (!(f.domain() == space) || !(f.codomain() == space))
    throw input_error(std::string(what) + ": space mismatch");
}

} // namespace

HomAssociativeSuperalgebra::HomAssociativeSuperalgebra(SuperSpace s,
                                                       MultiLinearMap m,
                                                       LinearMap a, bool comm)
    : space(std::move(s)), mu(std::move(m)), alpha(std::move(a)),
      commutative(comm) {
  if (!(mu.space() == space) || mu.arity() != 2)
    throw input_error("HomAssociativeSuperalgebra: product shape mismatch");
  require_endo(alpha, space, "HomAssociativeSuperalgebra");
}

HomLieSuperalgebra::HomLieSuperalgebra(SuperSpace s, MultiLinearMap b,
                                       LinearMap a)
    : space(std::move(s)), bracket(std::move(b)), alpha(std::move(a)) {
  if (!(bracket.space() == space) || bracket.arity() != 2)
    throw input_error("HomLieSuperalgebra: bracket shape mismatch");
  require_endo(alpha, space, "HomLieSuperalgebra");
}

HomPoissonSuperalgebra::HomPoissonSuperalgebra(SuperSpace s, MultiLinearMap b,
                                               MultiLinearMap m, LinearMap a,
                                               bool comm)
    : space(std::move(s)), bracket(std::move(b)), mu(std::move(m)),
      alpha(std::move(a)), commutative(comm) {
  if (!(bracket.space() == space) || bracket.arity() != 2)
    throw input_error("HomPoissonSuperalgebra: bracket shape mismatch");
  if (!(mu.space() == space) || mu.arity() != 2)
    throw input_error("HomPoissonSuperalgebra: product shape mismatch");
  require_endo(alpha, space, "HomPoissonSuperalgebra");
}

Vector hom_associator(const HomAssociativeSuperalgebra &A, const Vector &x,
                      const Vector &y, const Vector &z) {
  if (x.dim() != A.space.dim() || y.dim() != A.space.dim() ||
      z.dim() != A.space.dim())
    throw input_error("hom_associator: space mismatch");
  return ev2(A.mu, ev2(A.mu, x, y), A.alpha.apply(z)) -
         ev2(A.mu, A.alpha.apply(x), ev2(A.mu, y, z));
}

namespace {

CheckReport supercommutativity_scan(const SuperSpace &space,
                                    const MultiLinearMap &mu,
                                    const std::string &name) {
  CheckReport out = CheckReport::ok(name);
  for_each_tuple(space.dim(), 2, [&](std::span<const std::size_t> t) {
    const std::size_t rev[2] = {t[1], t[0]};
    const int s = sign_of(space.parity(t[0]) * space.parity(t[1]));
    Vector rhs = mu.value_at(rev);
    rhs *= Scalar(s);
    const Vector lhs = mu.value_at(t);
    if (lhs == rhs)
      return true;
    out = CheckReport::fail(name, labels_of(space, t),
                            format_vector(space, lhs),
                            format_vector(space, rhs));
    return false;
  });
  return out;
}

} // namespace

CheckReport check_hom_associative(const HomAssociativeSuperalgebra &A) {
  const SuperSpace &space = A.space;
  const auto acols = alpha_columns(A.alpha);

  CheckReport assoc = CheckReport::ok("hom-associativity");
  for_each_tuple(space.dim(), 3, [&](std::span<const std::size_t> t) {
    const Vector lhs =
        ev2(A.mu, A.mu.value_at(t.subspan(0, 2)), acols[t[2]]);
    const std::size_t yz[2] = {t[1], t[2]};
    const Vector rhs = ev2(A.mu, acols[t[0]], A.mu.value_at(yz));
    if (lhs == rhs)
      return true;
    assoc = CheckReport::fail("hom-associativity", labels_of(space, t),
                              format_vector(space, lhs),
                              format_vector(space, rhs));
    return false;
  });

  std::vector<CheckReport> parts;
  parts.push_back(std::move(assoc));
  if (A.commutative)
    parts.push_back(
        supercommutativity_scan(space, A.mu, "super-commutativity"));
  return CheckReport::aggregate("hom-associative", std::move(parts));
}

CheckReport check_hom_lie(const HomLieSuperalgebra &L) {
  const SuperSpace &space = L.space;
  const auto acols = alpha_columns(L.alpha);

  CheckReport skew = CheckReport::ok("super-skew-symmetry");
  for_each_tuple(space.dim(), 2, [&](std::span<const std::size_t> t) {
    const std::size_t rev[2] = {t[1], t[0]};
    const int s = -sign_of(space.parity(t[0]) * space.parity(t[1]));
    Vector rhs = L.bracket.value_at(rev);
    rhs *= Scalar(s);
    const Vector lhs = L.bracket.value_at(t);
    if (lhs == rhs)
      return true;
    skew = CheckReport::fail("super-skew-symmetry", labels_of(space, t),
                             format_vector(space, lhs),
                             format_vector(space, rhs));
    return false;
  });

  CheckReport jacobi = CheckReport::ok("hom-super-jacobi");
  for_each_tuple(space.dim(), 3, [&](std::span<const std::size_t> t) {
    const std::size_t yz[2] = {t[1], t[2]};
    const std::size_t xz[2] = {t[0], t[2]};
    const Vector lhs = ev2(L.bracket, acols[t[0]], L.bracket.value_at(yz));
    Vector rhs = ev2(L.bracket, L.bracket.value_at(t.subspan(0, 2)),
                     acols[t[2]]);
    Vector second = ev2(L.bracket, acols[t[1]], L.bracket.value_at(xz));
    second *= Scalar(sign_of(space.parity(t[0]) * space.parity(t[1])));
    rhs += second;
    if (lhs == rhs)
      return true;
    jacobi = CheckReport::fail("hom-super-jacobi", labels_of(space, t),
                               format_vector(space, lhs),
                               format_vector(space, rhs));
    return false;
  });

  std::vector<CheckReport> parts;
  parts.push_back(std::move(skew));
  parts.push_back(std::move(jacobi));
  return CheckReport::aggregate("hom-lie", std::move(parts));
}

CheckReport check_hom_leibniz_form(const HomPoissonSuperalgebra &P,
                                   LeibnizForm form) {
  const SuperSpace &space = P.space;
  const auto acols = alpha_columns(P.alpha);
  const char *name = form == LeibnizForm::primary ? "hom-leibniz"
                                                  : "hom-leibniz-variant";

  CheckReport out = CheckReport::ok(name);
  for_each_tuple(space.dim(), 3, [&](std::span<const std::size_t> t) {
    const std::size_t yz[2] = {t[1], t[2]};
    const std::size_t xy[2] = {t[0], t[1]};
    const std::size_t xz[2] = {t[0], t[2]};
    const Vector lhs = ev2(P.bracket, acols[t[0]], P.mu.value_at(yz));
    Vector rhs = ev2(P.mu, P.bracket.value_at(xy), acols[t[2]]);
    if (form == LeibnizForm::primary) {
      Vector second = ev2(P.mu, acols[t[1]], P.bracket.value_at(xz));
      second *= Scalar(sign_of(space.parity(t[0]) * space.parity(t[1])));
      rhs += second;
    } else {
      Vector second = ev2(P.mu, P.bracket.value_at(xz), acols[t[1]]);
      second *= Scalar(sign_of(space.parity(t[1]) * space.parity(t[2])));
      rhs += second;
    }
    if (lhs == rhs)
      return true;
    out = CheckReport::fail(name, labels_of(space, t),
                            format_vector(space, lhs),
                            format_vector(space, rhs));
    return false;
  });
  return out;
}

CheckReport check_hom_leibniz(const HomPoissonSuperalgebra &P) {
  CheckReport primary = check_hom_leibniz_form(P, LeibnizForm::primary);
  if (!P.commutative) {
    std::vector<CheckReport> parts;
    parts.push_back(std::move(primary));
    return CheckReport::aggregate("hom-leibniz", std::move(parts));
  }
  const CheckReport variant = check_hom_leibniz_form(P, LeibnizForm::variant);
  CheckReport agreement = CheckReport::ok("leibniz-forms-agree");
  if (primary.pass != variant.pass)
    agreement = CheckReport::fail(
        "leibniz-forms-agree", {}, primary.pass ? "pass" : "fail",
        variant.pass ? "pass" : "fail",
        "the two Leibniz forms must agree on a commutative product");
  std::vector<CheckReport> parts;
  parts.push_back(std::move(primary));
  parts.push_back(std::move(agreement));
  return CheckReport::aggregate("hom-leibniz", std::move(parts));
}

CheckReport check_hom_poisson(const HomPoissonSuperalgebra &P) {
  std::vector<CheckReport> parts;
  parts.push_back(check_hom_lie(P.lie_part()));
  parts.push_back(check_hom_associative(P.associative_part()));
  parts.push_back(check_hom_leibniz(P));
  return CheckReport::aggregate("hom-poisson", std::move(parts));
}

CheckReport multiplicativity_scan(const LinearMap &alpha,
                                  const MultiLinearMap &op,
                                  const std::string &op_name) {
  const SuperSpace &space = op.space();
  require_endo(alpha, space, "multiplicativity_scan");
  const auto acols = alpha_columns(alpha);
  const std::string name = "multiplicative(" + op_name + ")";

  CheckReport out = CheckReport::ok(name);
  for_each_tuple(space.dim(), op.arity(),
                 [&](std::span<const std::size_t> t) {
                   const Vector lhs = alpha.apply(op.value_at(t));
                   std::vector<Vector> args;
                   args.reserve(t.size());
                   for (auto i : t)
                     args.push_back(acols[i]);
                   const Vector rhs = eval_multilinear(op, args);
                   if (lhs == rhs)
                     return true;
                   out = CheckReport::fail(name, labels_of(space, t),
                                           format_vector(space, lhs),
                                           format_vector(space, rhs));
                   return false;
                 });
  return out;
}

CheckReport check_multiplicative(const HomAssociativeSuperalgebra &A) {
  std::vector<CheckReport> parts;
  parts.push_back(multiplicativity_scan(A.alpha, A.mu, "mu"));
  return CheckReport::aggregate("multiplicative", std::move(parts));
}

CheckReport check_multiplicative(const HomLieSuperalgebra &L) {
  std::vector<CheckReport> parts;
  parts.push_back(multiplicativity_scan(L.alpha, L.bracket, "bracket"));
  return CheckReport::aggregate("multiplicative", std::move(parts));
}

CheckReport check_multiplicative(const HomPoissonSuperalgebra &P) {
  std::vector<CheckReport> parts;
  parts.push_back(multiplicativity_scan(P.alpha, P.bracket, "bracket"));
  parts.push_back(multiplicativity_scan(P.alpha, P.mu, "mu"));
  return CheckReport::aggregate("multiplicative", std::move(parts));
}

CheckReport check_morphism(const LinearMap &f, const HomPoissonSuperalgebra &A,
                           const HomPoissonSuperalgebra &B, bool weak) {
  if (!(f.domain() == A.space) || !(f.codomain() == B.space))
    throw input_error("check_morphism: space mismatch");

  auto intertwines = [&](const MultiLinearMap &opA, const MultiLinearMap &opB,
                         const std::string &name) {
    CheckReport r = CheckReport::ok(name);
    for_each_tuple(A.space.dim(), 2, [&](std::span<const std::size_t> t) {
      const Vector lhs = f.apply(opA.value_at(t));
      const Vector rhs = ev2(opB, f.column(t[0]), f.column(t[1]));
      if (lhs == rhs)
        return true;
      r = CheckReport::fail(name, labels_of(A.space, t),
                            format_vector(B.space, lhs),
                            format_vector(B.space, rhs));
      return false;
    });
    return r;
  };

  std::vector<CheckReport> parts;
  parts.push_back(intertwines(A.bracket, B.bracket, "morphism(bracket)"));
  parts.push_back(intertwines(A.mu, B.mu, "morphism(mu)"));
  if (!weak) {
    CheckReport tw = CheckReport::ok("morphism(twist)");
    const Matrix lhs = f.entries() * A.alpha.entries();
    const Matrix rhs = B.alpha.entries() * f.entries();
    if (!(lhs == rhs)) {
      for (std::size_t i = 0; i < A.space.dim(); ++i)
        if (!(lhs.column(i) == rhs.column(i))) {
          tw = CheckReport::fail("morphism(twist)", {A.space.label(i)},
                                 format_vector(B.space, lhs.column(i)),
                                 format_vector(B.space, rhs.column(i)));
          break;
        }
    }
    parts.push_back(std::move(tw));
  }
  return CheckReport::aggregate(weak ? "weak-morphism" : "morphism",
                                std::move(parts));
}

namespace {

CheckReport derivation_law_scan(const LinearMap &D, const MultiLinearMap &op,
                                Parity dparity, const std::string &name) {
  const SuperSpace &space = op.space();
  CheckReport out = CheckReport::ok(name);
  for_each_tuple(space.dim(), 2, [&](std::span<const std::size_t> t) {
    const Vector lhs = D.apply(op.value_at(t));
    Vector rhs = ev2(op, D.column(t[0]), basis_vector(space, t[1]));
    Vector second = ev2(op, basis_vector(space, t[0]), D.column(t[1]));
    second *= Scalar(sign_of(dparity * space.parity(t[0])));
    rhs += second;
    if (lhs == rhs)
      return true;
    out = CheckReport::fail(name, labels_of(space, t),
                            format_vector(space, lhs),
                            format_vector(space, rhs));
    return false;
  });
  return out;
}

} // namespace

CheckReport check_derivation(const LinearMap &D,
                             const HomPoissonSuperalgebra &P,
                             Parity parity_of_D, DerivationLaw law) {
  require_endo(D, P.space, "check_derivation");
  std::vector<CheckReport> parts;
  {
    CheckReport c = maps_commute(D, P.alpha);
    c.check = "derivation(commutes-with-alpha)";
    parts.push_back(std::move(c));
  }
  if (law != DerivationLaw::bracket_only)
    parts.push_back(
        derivation_law_scan(D, P.mu, parity_of_D, "derivation(mu)"));
  if (law != DerivationLaw::product_only)
    parts.push_back(
        derivation_law_scan(D, P.bracket, parity_of_D, "derivation(bracket)"));
  return CheckReport::aggregate("derivation", std::move(parts));
}

LinearMap adjoint(const Vector &x, const HomLieSuperalgebra &S) {
  if (x.dim() != S.space.dim())
    throw input_error("adjoint: space mismatch");
  if (!homogeneous_parity(S.space, x))
    throw input_error("adjoint: element is not homogeneous");
  Matrix m(S.space.dim(), S.space.dim());
  for (std::size_t j = 0; j < S.space.dim(); ++j) {
    const Vector col = ev2(S.bracket, x, basis_vector(S.space, j));
    for (std::size_t r = 0; r < S.space.dim(); ++r)
      m.at(r, j) = col[r];
  }
  return LinearMap::endo(S.space, std::move(m));
}

} // namespace hnk
