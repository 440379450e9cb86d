#include "hnk/constructions.hpp"

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

Vector ev2(const MultiLinearMap &m, const Vector &a, const Vector &b) {
  const Vector args[2] = {a, b};
  return eval_multilinear(m, args);
}

/// op(Rx,Ry) = R(op(Rx,y) + op(x,Ry) + w op(x,y)) on basis pairs.
CheckReport rota_baxter_scan(const RotaBaxterOperator &R,
                             const MultiLinearMap &op,
                             const std::string &op_name) {
  const SuperSpace &space = op.space();
  const std::string name = "rota-baxter(" + op_name + ")";
  CheckReport out = CheckReport::ok(name);
  for_each_tuple(space.dim(), 2, [&](std::span<const std::size_t> t) {
    const Vector rx = R.map.column(t[0]);
    const Vector ry = R.map.column(t[1]);
    const Vector ex = basis_vector(space, t[0]);
    const Vector ey = basis_vector(space, t[1]);
    const Vector lhs = ev2(op, rx, ry);
    Vector inner = ev2(op, rx, ey) + ev2(op, ex, ry);
    Vector weighted = op.value_at(t);
    weighted *= R.weight;
    inner += weighted;
    const Vector rhs = R.map.apply(inner);
    if (lhs == rhs)
      return true;
    out = CheckReport::fail(name, labels_of(space, t),
                            format_vector(space, lhs),
                            format_vector(space, rhs));
    return false;
  });
  return out;
}

CheckReport rb_preliminaries(const RotaBaxterOperator &R,
                             const LinearMap &alpha) {
  std::vector<CheckReport> parts;
  {
    CheckReport e = is_even(R.map);
    e.check = "rota-baxter(even)";
    parts.push_back(std::move(e));
  }
  {
    CheckReport c = maps_commute(R.map, alpha);
    c.check = "rota-baxter(commutes-with-alpha)";
    parts.push_back(std::move(c));
  }
  return CheckReport::aggregate("rota-baxter-preliminaries",
                                std::move(parts));
}

} // namespace

CheckReport check_rota_baxter(const RotaBaxterOperator &R,
                              const HomAssociativeSuperalgebra &A) {
  if (!(R.map.domain() == A.space))
    throw input_error("check_rota_baxter: space mismatch");
  std::vector<CheckReport> parts;
  parts.push_back(rb_preliminaries(R, A.alpha));
  parts.push_back(rota_baxter_scan(R, A.mu, "mu"));
  return CheckReport::aggregate("rota-baxter", std::move(parts));
}

CheckReport check_rota_baxter(const RotaBaxterOperator &R,
                              const HomLieSuperalgebra &L) {
  if (!(R.map.domain() == L.space))
    throw input_error("check_rota_baxter: space mismatch");
  std::vector<CheckReport> parts;
  parts.push_back(rb_preliminaries(R, L.alpha));
  parts.push_back(rota_baxter_scan(R, L.bracket, "bracket"));
  return CheckReport::aggregate("rota-baxter", std::move(parts));
}

CheckReport check_rota_baxter(const RotaBaxterOperator &R,
                              const HomPoissonSuperalgebra &P) {
  if (!(R.map.domain() == P.space))
    throw input_error("check_rota_baxter: space mismatch");
  std::vector<CheckReport> parts;
  parts.push_back(rb_preliminaries(R, P.alpha));
  parts.push_back(rota_baxter_scan(R, P.mu, "mu"));
  parts.push_back(rota_baxter_scan(R, P.bracket, "bracket"));
  return CheckReport::aggregate("rota-baxter", std::move(parts));
}

CheckReport check_rota_baxter_pair(const RotaBaxterOperator &R,
                                   const RotaBaxterOperator &Rprime,
                                   const HomPoissonSuperalgebra &P) {
  std::vector<CheckReport> parts;
  parts.push_back(check_rota_baxter(R, P.associative_part()));
  parts.push_back(check_rota_baxter(Rprime, P.lie_part()));
  {
    CheckReport c = maps_commute(R.map, Rprime.map);
    c.check = "rota-baxter-pair(operators-commute)";
    parts.push_back(std::move(c));
  }
  return CheckReport::aggregate("rota-baxter-pair", std::move(parts));
}

HomLieSuperalgebra commutator_bracket(const HomAssociativeSuperalgebra &A) {
  const CheckReport ok = check_hom_associative(A);
  if (!ok)
    throw input_error("commutator_bracket: input is not Hom-associative (" +
                      ok.detail + ")");
  MultiLinearMap bracket(A.space, 2);
  for_each_tuple(A.space.dim(), 2, [&](std::span<const std::size_t> t) {
    const std::size_t rev[2] = {t[1], t[0]};
    Vector v = A.mu.value_at(rev);
    v *= Scalar(-sign_of(A.space.parity(t[0]) * A.space.parity(t[1])));
    v += A.mu.value_at(t);
    bracket.set_value(t, v);
    return true;
  });
  return HomLieSuperalgebra(A.space, std::move(bracket), A.alpha);
}

HomPoissonSuperalgebra
commutator_poisson(const HomAssociativeSuperalgebra &A) {
  HomLieSuperalgebra lie = commutator_bracket(A);
  return HomPoissonSuperalgebra(A.space, std::move(lie.bracket), A.mu,
                                A.alpha, A.commutative);
}

namespace {

MultiLinearMap twisted_product(const MultiLinearMap &op,
                               const RotaBaxterOperator &R) {
  const SuperSpace &space = op.space();
  MultiLinearMap out(space, 2);
  for_each_tuple(space.dim(), 2, [&](std::span<const std::size_t> t) {
    const Vector rx = R.map.column(t[0]);
    const Vector ry = R.map.column(t[1]);
    Vector v = ev2(op, rx, basis_vector(space, t[1])) +
               ev2(op, basis_vector(space, t[0]), ry);
    Vector weighted = op.value_at(t);
    weighted *= R.weight;
    v += weighted;
    out.set_value(t, v);
    return true;
  });
  return out;
}

void require_verified(const CheckReport &r, const char *what) {
  if (!r)
    throw input_error(std::string(what) +
                      ": Rota-Baxter operator failed its check (" +
                      (r.detail.empty() ? r.check : r.detail) + ")");
}

} // namespace

HomAssociativeSuperalgebra
twist_by_rota_baxter(const HomAssociativeSuperalgebra &A,
                     const RotaBaxterOperator &R) {
  if (R.flavor != RbFlavor::associative)
    throw input_error("twist_by_rota_baxter: operator flavor does not act on "
                      "a Hom-associative structure");
  require_verified(check_rota_baxter(R, A), "twist_by_rota_baxter");
  return HomAssociativeSuperalgebra(A.space, twisted_product(A.mu, R),
                                    A.alpha, A.commutative);
}

HomLieSuperalgebra twist_by_rota_baxter(const HomLieSuperalgebra &L,
                                        const RotaBaxterOperator &R) {
  if (R.flavor != RbFlavor::lie)
    throw input_error("twist_by_rota_baxter: operator flavor does not act on "
                      "a Hom-Lie structure");
  require_verified(check_rota_baxter(R, L), "twist_by_rota_baxter");
  return HomLieSuperalgebra(L.space, twisted_product(L.bracket, R), L.alpha);
}

HomPoissonSuperalgebra twist_by_rota_baxter(const HomPoissonSuperalgebra &P,
                                            const RotaBaxterOperator &R) {
  if (R.flavor != RbFlavor::poisson_pair)
    throw input_error("twist_by_rota_baxter: Poisson twist needs the "
                      "poisson_pair flavor (one operator, equal weights)");
  require_verified(check_rota_baxter(R, P), "twist_by_rota_baxter");
  return HomPoissonSuperalgebra(P.space, twisted_product(P.bracket, R),
                                twisted_product(P.mu, R), P.alpha,
                                P.commutative);
}

CheckReport check_inverse_derivation(const RotaBaxterOperator &R,
                                     const HomPoissonSuperalgebra &S) {
  if (R.weight != 0)
    throw input_error("check_inverse_derivation: weight must be zero");
  const auto inv = R.map.inverse();
  if (!inv)
    throw input_error("check_inverse_derivation: operator is singular");
  DerivationLaw law = DerivationLaw::both;
  if (R.flavor == RbFlavor::associative)
    law = DerivationLaw::product_only;
  else if (R.flavor == RbFlavor::lie)
    law = DerivationLaw::bracket_only;
  CheckReport r = check_derivation(*inv, S, Parity(0), law);
  r.check = "inverse-derivation";
  return r;
}

MultiLinearMap induced_bracket_tensor(const HomLieSuperalgebra &L,
                                      const Cochain &phi) {
  if (!(phi.space() == L.space))
    throw input_error("induced bracket: cochain over a different space");
  const SuperSpace &space = L.space;
  const std::size_t n = phi.arity() + 2;

  MultiLinearMap out(space, n);
  for_each_tuple(space.dim(), n, [&](std::span<const std::size_t> t) {
    Vector acc(space.dim());
    const ParityBook book(space, t);
    std::vector<std::size_t> rest(n - 2);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        std::size_t r = 0;
        for (std::size_t k = 1; k <= n; ++k)
          if (k != i && k != j)
            rest[r++] = t[k - 1];
        const Scalar w = phi.value_at(rest);
        if (w == 0)
          continue;
        const std::size_t pair[2] = {t[i - 1], t[j - 1]};
        Vector term = L.bracket.value_at(pair);
        int sign = ((i + j + 1) % 2 == 0) ? 1 : -1;
        sign *= sign_of(book.gamma(i, j));
        Scalar coeff = w;
        coeff *= sign;
        term *= coeff;
        acc += term;
      }
    out.set_value(t, acc);
    return true;
  });
  return out;
}

NaryHomNambuSuperalgebra induced_nary_bracket(const HomLieSuperalgebra &L,
                                              const Cochain &phi) {
  const CheckReport even = is_even(phi);
  if (!even)
    throw input_error("induced_nary_bracket: cochain is not even");
  const CheckReport mult = check_multiplicative(L);
  if (!mult)
    throw input_error("induced_nary_bracket: base structure is not "
                      "multiplicative");
  const std::size_t n = phi.arity() + 2;
  return NaryHomNambuSuperalgebra(L.space, n, induced_bracket_tensor(L, phi),
                                  L.alpha, true);
}

CheckReport check_phi_conditions(const HomLieSuperalgebra &L,
                                 const Cochain &phi) {
  if (!(phi.space() == L.space))
    throw input_error("check_phi_conditions: cochain over a different space");
  const SuperSpace &space = L.space;
  const std::size_t n = phi.arity() + 2;

  // (a) phi(alpha x1, x2, ..) = phi(x1, x2, ..)
  CheckReport invariance = CheckReport::ok("phi-alpha-invariance");
  if (phi.arity() >= 1) {
    for_each_tuple(space.dim(), phi.arity(),
                   [&](std::span<const std::size_t> t) {
                     std::vector<Vector> args;
                     args.reserve(t.size());
                     args.push_back(L.alpha.column(t[0]));
                     for (std::size_t k = 1; k < t.size(); ++k)
                       args.push_back(basis_vector(space, t[k]));
                     const Scalar lhs = phi.eval(args);
                     const Scalar rhs = phi.value_at(t);
                     if (lhs == rhs)
                       return true;
                     invariance = CheckReport::fail(
                         "phi-alpha-invariance", labels_of(space, t),
                         scalar_to_string(lhs), scalar_to_string(rhs));
                     return false;
                   });
  } else {
    invariance.detail = "vacuous at arity 0";
  }

  // (b) phi([X]_phi, Y) = 0 over X in basis^n, Y in basis^{n-3}
  CheckReport closure = CheckReport::ok("phi-bracket-closure");
  if (n >= 3) {
    const MultiLinearMap bracket = induced_bracket_tensor(L, phi);
    for_each_tuple(space.dim(), n, [&](std::span<const std::size_t> xs) {
      const Vector bx = bracket.value_at(xs);
      if (bx.is_zero())
        return true;
      return for_each_tuple(
          space.dim(), n - 3, [&](std::span<const std::size_t> ys) {
            std::vector<Vector> args;
            args.reserve(n - 2);
            args.push_back(bx);
            for (auto y : ys)
              args.push_back(basis_vector(space, y));
            const Scalar val = phi.eval(args);
            if (val == 0)
              return true;
            std::vector<std::string> w = labels_of(space, xs);
            for (const auto &l : labels_of(space, ys))
              w.push_back(l);
            closure =
                CheckReport::fail("phi-bracket-closure", std::move(w),
                                  scalar_to_string(val), "0");
            return false;
          });
    });
  } else {
    closure.detail = "vacuous at n=2";
  }

  std::vector<CheckReport> parts;
  parts.push_back(std::move(invariance));
  parts.push_back(std::move(closure));
  return CheckReport::aggregate("phi-conditions", std::move(parts));
}

CheckReport check_phi_poisson(const HomPoissonSuperalgebra &P,
                              const Cochain &phi) {
  if (!(phi.space() == P.space))
    throw input_error("check_phi_poisson: cochain over a different space");
  const SuperSpace &space = P.space;
  const std::size_t n = phi.arity() + 2;

  CheckReport out = CheckReport::ok("phi-poisson-compatibility");
  if (n < 3) {
    out.detail = "vacuous at n=2";
    return out;
  }
  for_each_tuple(space.dim(), n - 3, [&](std::span<const std::size_t> xs) {
    std::vector<Vector> head;
    head.reserve(n - 2);
    for (auto x : xs)
      head.push_back(basis_vector(space, x));
    head.emplace_back();

    return for_each_tuple(
        space.dim(), 3, [&](std::span<const std::size_t> yzt) {
          const std::size_t y = yzt[0], z = yzt[1], tt = yzt[2];
          const std::size_t yz[2] = {y, z};

          head.back() = P.mu.value_at(yz);
          const Scalar phi_mu = phi.eval(head);
          Vector lhs = P.alpha.column(tt);
          lhs *= phi_mu;

          head.back() = basis_vector(space, y);
          const Scalar phi_y = phi.eval(head);
          head.back() = basis_vector(space, z);
          const Scalar phi_z = phi.eval(head);

          Vector rhs = ev2(P.mu, P.alpha.column(z), basis_vector(space, tt));
          rhs *= phi_y;
          Vector second =
              ev2(P.mu, P.alpha.column(y), basis_vector(space, tt));
          Scalar c = phi_z;
          c *= sign_of(space.parity(y) * space.parity(z));
          second *= c;
          rhs += second;

          if (lhs == rhs)
            return true;
          std::vector<std::string> w = labels_of(space, xs);
          w.push_back(space.label(y));
          w.push_back(space.label(z));
          w.push_back(space.label(tt));
          out = CheckReport::fail("phi-poisson-compatibility", std::move(w),
                                  format_vector(space, lhs),
                                  format_vector(space, rhs));
          return false;
        });
  });
  return out;
}

ReducedBracket reduce_bracket(const NaryHomNambuPoissonSuperalgebra &N,
                              std::span<const Vector> A) {
  const SuperSpace &space = N.base.space;
  const std::size_t n = N.base.n;
  if (A.size() != n - 2)
    throw input_error("reduce_bracket: expected n-2 pinned elements");

  std::vector<CheckReport> conds;
  Parity total;
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].dim() != space.dim())
      throw input_error("reduce_bracket: space mismatch");
    const auto p = homogeneous_parity(space, A[i]);
    if (!p)
      throw input_error("reduce_bracket: pinned element is not homogeneous");
    total = total + *p;
    const Vector im = N.base.alpha().apply(A[i]);
    if (!(im == A[i]))
      conds.push_back(CheckReport::fail(
          "reduce(alpha-fixity)", {"a" + std::to_string(i + 1)},
          format_vector(space, im), format_vector(space, A[i]),
          "pinned element must lie in ker(alpha - id)"));
  }
  if (conds.empty())
    conds.push_back(CheckReport::ok("reduce(alpha-fixity)"));
  if (total.odd())
    conds.push_back(CheckReport::fail("reduce(parity)", {}, "1", "0",
                                      "total parity of pinned tuple must "
                                      "be even"));
  else
    conds.push_back(CheckReport::ok("reduce(parity)"));

  MultiLinearMap bracket(space, 2);
  std::vector<Vector> args(n);
  for (std::size_t k = 0; k < n - 2; ++k)
    args[k + 2] = A[k];
  for_each_tuple(space.dim(), 2, [&](std::span<const std::size_t> t) {
    args[0] = basis_vector(space, t[0]);
    args[1] = basis_vector(space, t[1]);
    bracket.set_value(t, eval_multilinear(N.base.bracket, args));
    return true;
  });

  CheckReport cond =
      CheckReport::aggregate("reduce-conditions", std::move(conds));
  if (!cond.pass && cond.detail.empty())
    cond.detail = "returned structure is unverified";
  return ReducedBracket{
      HomPoissonSuperalgebra(space, std::move(bracket), N.mu,
                             N.base.alpha(), N.commutative),
      std::move(cond)};
}

} // namespace hnk
