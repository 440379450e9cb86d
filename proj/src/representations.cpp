#include "hnk/representations.hpp"

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

/// First differing column decides the witness.
CheckReport compare_ops(const std::string &name,
                        std::vector<std::string> witness, const Matrix &lhs,
                        const Matrix &rhs, const SuperSpace &module) {
  if (lhs == rhs)
    return CheckReport::ok(name);
  for (std::size_t u = 0; u < module.dim(); ++u) {
    const Vector a = lhs.column(u), b = rhs.column(u);
    if (!(a == b)) {
      witness.push_back(module.label(u));
      return CheckReport::fail(name, std::move(witness),
                               format_vector(module, a),
                               format_vector(module, b));
    }
  }
  return CheckReport::ok(name);
}

} // namespace

HomModule::HomModule(SuperSpace s, LinearMap av)
    : space(std::move(s)), alpha_v(std::move(av)) {
  if (!(alpha_v.domain() == space) || !(alpha_v.codomain() == space))
    throw input_error("HomModule: twist shape mismatch");
}

ActionTensor::ActionTensor(SuperSpace algebra, SuperSpace module)
    : algebra_(std::move(algebra)), module_(std::move(module)),
      ops_(algebra_.dim(), Matrix(module_.dim(), module_.dim())) {}

Matrix ActionTensor::apply(const Vector &x) const {
  if (x.dim() != algebra_.dim())
    throw input_error("ActionTensor: space mismatch");
  Matrix out(module_.dim(), module_.dim());
  for (std::size_t i = 0; i < algebra_.dim(); ++i) {
    if (x[i] == 0)
      continue;
    Matrix t = ops_[i];
    t *= x[i];
    out += t;
  }
  return out;
}

NaryActionTensor::NaryActionTensor(SuperSpace algebra, SuperSpace module,
                                   std::size_t arity)
    : algebra_(std::move(algebra)), module_(std::move(module)),
      arity_(arity) {
  if (arity_ == 0)
    throw input_error("NaryActionTensor: arity must be positive");
  std::size_t rows = 1;
  for (std::size_t i = 0; i < arity_; ++i)
    rows *= algebra_.dim();
  ops_.assign(rows, Matrix(module_.dim(), module_.dim()));
}

Matrix &NaryActionTensor::op(std::span<const std::size_t> idx) {
  if (idx.size() != arity_)
    throw input_error("NaryActionTensor: arity mismatch");
  return ops_[flat_index(idx, algebra_.dim())];
}

const Matrix &NaryActionTensor::op(std::span<const std::size_t> idx) const {
  if (idx.size() != arity_)
    throw input_error("NaryActionTensor: arity mismatch");
  return ops_[flat_index(idx, algebra_.dim())];
}

Matrix NaryActionTensor::apply(std::span<const Vector> args) const {
  if (args.size() != arity_)
    throw input_error("NaryActionTensor: arity mismatch");
  for (const auto &a : args)
    if (a.dim() != algebra_.dim())
      throw input_error("NaryActionTensor: space mismatch");
  Matrix out(module_.dim(), module_.dim());
  std::vector<std::size_t> idx(arity_);
  auto expand = [&](auto &&self, std::size_t slot, const Scalar &acc) -> void {
    if (slot == arity_) {
      Matrix t = ops_[flat_index(idx, algebra_.dim())];
      t *= acc;
      out += t;
      return;
    }
    for (std::size_t i = 0; i < algebra_.dim(); ++i) {
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

CheckReport is_even(const ActionTensor &t, const std::string &name) {
  const SuperSpace &A = t.algebra();
  const SuperSpace &V = t.module();
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t u = 0; u < V.dim(); ++u)
      for (std::size_t v = 0; v < V.dim(); ++v)
        if (t.op(a).at(v, u) != 0 &&
            !(V.parity(v) == A.parity(a) + V.parity(u)))
          return CheckReport::fail(
              name + "(even)", {A.label(a), V.label(u)},
              format_vector(V, t.op(a).column(u)),
              "component of parity " +
                  std::to_string((A.parity(a) + V.parity(u)).value()));
  return CheckReport::ok(name + "(even)");
}

CheckReport is_even(const NaryActionTensor &t, const std::string &name) {
  const SuperSpace &A = t.algebra();
  const SuperSpace &V = t.module();
  CheckReport out = CheckReport::ok(name + "(even)");
  for_each_tuple(A.dim(), t.arity(), [&](std::span<const std::size_t> idx) {
    const Parity pa = A.tuple_parity(idx);
    for (std::size_t u = 0; u < V.dim(); ++u)
      for (std::size_t v = 0; v < V.dim(); ++v)
        if (t.op(idx).at(v, u) != 0 &&
            !(V.parity(v) == pa + V.parity(u))) {
          std::vector<std::string> w = labels_of(A, idx);
          w.push_back(V.label(u));
          out = CheckReport::fail(
              name + "(even)", std::move(w),
              format_vector(V, t.op(idx).column(u)),
              "component of parity " +
                  std::to_string((pa + V.parity(u)).value()));
          return false;
        }
    return true;
  });
  return out;
}

CheckReport check_alternating(const NaryActionTensor &t,
                              const std::string &name) {
  const SuperSpace &A = t.algebra();
  CheckReport out = CheckReport::ok(name + "(alternating)");
  if (t.arity() < 2)
    return out;
  for_each_tuple(A.dim(), t.arity(), [&](std::span<const std::size_t> idx) {
    for (std::size_t s = 0; s + 1 < t.arity(); ++s) {
      std::vector<std::size_t> sw(idx.begin(), idx.end());
      std::swap(sw[s], sw[s + 1]);
      Matrix want = t.op(sw);
      want *= Scalar(-sign_of(A.parity(idx[s]) * A.parity(idx[s + 1])));
      if (t.op(idx) == want)
        continue;
      out = compare_ops(name + "(alternating)", labels_of(A, idx),
                        t.op(idx), want, t.module());
      return false;
    }
    return true;
  });
  return out;
}

CheckReport check_rep_assoc(const HomAssociativeSuperalgebra &A,
                            const BinaryRepresentation &rep) {
  if (!rep.eta)
    throw input_error("check_rep_assoc: representation carries no eta");
  const ActionTensor &eta = *rep.eta;
  if (!(eta.algebra() == A.space) || !(eta.module() == rep.module.space))
    throw input_error("check_rep_assoc: space mismatch");
  const SuperSpace &space = A.space;
  const SuperSpace &V = rep.module.space;
  const Matrix &av = rep.module.alpha_v.entries();
  const auto acols = alpha_columns(A.alpha);

  std::vector<CheckReport> parts;
  parts.push_back(is_even(eta, "eta"));

  CheckReport eq1 = CheckReport::ok("rep-assoc(action)");
  CheckReport eq2 = CheckReport::ok("rep-assoc(symmetry)");
  for_each_tuple(space.dim(), 2, [&](std::span<const std::size_t> t) {
    const Matrix ax = eta.apply(acols[t[0]]);
    const Matrix ay = eta.apply(acols[t[1]]);
    const Matrix lhs1 = eta.apply(A.mu.value_at(t)) * av;
    const Matrix rhs1 = ax * eta.op(t[1]);
    if (eq1.pass)
      eq1 = compare_ops("rep-assoc(action)", labels_of(space, t), lhs1, rhs1,
                        V);
    Matrix rhs2 = ay * eta.op(t[0]);
    rhs2 *= Scalar(sign_of(space.parity(t[0]) * space.parity(t[1])));
    if (eq2.pass)
      eq2 = compare_ops("rep-assoc(symmetry)", labels_of(space, t), rhs1,
                        rhs2, V);
    return eq1.pass || eq2.pass; // keep first witness of each
  });
  parts.push_back(std::move(eq1));
  parts.push_back(std::move(eq2));
  return CheckReport::aggregate("rep-assoc", std::move(parts));
}

CheckReport check_rep_lie(const HomLieSuperalgebra &L,
                          const BinaryRepresentation &rep) {
  if (!rep.rho)
    throw input_error("check_rep_lie: representation carries no rho");
  const ActionTensor &rho = *rep.rho;
  if (!(rho.algebra() == L.space) || !(rho.module() == rep.module.space))
    throw input_error("check_rep_lie: space mismatch");
  const SuperSpace &space = L.space;
  const SuperSpace &V = rep.module.space;
  const Matrix &av = rep.module.alpha_v.entries();
  const auto acols = alpha_columns(L.alpha);

  std::vector<CheckReport> parts;
  parts.push_back(is_even(rho, "rho"));

  CheckReport eq = CheckReport::ok("rep-lie(action)");
  for_each_tuple(space.dim(), 2, [&](std::span<const std::size_t> t) {
    const Matrix lhs = rho.apply(L.bracket.value_at(t)) * av;
    Matrix rhs = rho.apply(acols[t[0]]) * rho.op(t[1]);
    Matrix second = rho.apply(acols[t[1]]) * rho.op(t[0]);
    second *= Scalar(sign_of(space.parity(t[0]) * space.parity(t[1])));
    rhs -= second;
    eq = compare_ops("rep-lie(action)", labels_of(space, t), lhs, rhs, V);
    return eq.pass;
  });
  parts.push_back(std::move(eq));
  return CheckReport::aggregate("rep-lie", std::move(parts));
}

CheckReport check_rep_poisson(const HomPoissonSuperalgebra &P,
                              const BinaryRepresentation &rep) {
  if (!rep.eta || !rep.rho)
    throw input_error("check_rep_poisson: representation needs eta and rho");
  const SuperSpace &space = P.space;
  const SuperSpace &V = rep.module.space;
  const ActionTensor &eta = *rep.eta;
  const ActionTensor &rho = *rep.rho;
  const Matrix &av = rep.module.alpha_v.entries();
  const auto acols = alpha_columns(P.alpha);

  std::vector<CheckReport> parts;
  parts.push_back(check_rep_assoc(P.associative_part(), rep));
  parts.push_back(check_rep_lie(P.lie_part(), rep));

  CheckReport mixed1 = CheckReport::ok("rep-poisson(bracket-action)");
  CheckReport mixed2 = CheckReport::ok("rep-poisson(product-action)");
  for_each_tuple(space.dim(), 2, [&](std::span<const std::size_t> t) {
    const int sg = sign_of(space.parity(t[0]) * space.parity(t[1]));

    const Matrix lhs1 = eta.apply(P.bracket.value_at(t)) * av;
    Matrix rhs1 = rho.apply(acols[t[0]]) * eta.op(t[1]);
    Matrix sub = eta.apply(acols[t[1]]) * rho.op(t[0]);
    sub *= Scalar(sg);
    rhs1 -= sub;
    if (mixed1.pass)
      mixed1 = compare_ops("rep-poisson(bracket-action)",
                           labels_of(space, t), lhs1, rhs1, V);

    const Matrix lhs2 = rho.apply(P.mu.value_at(t)) * av;
    Matrix rhs2 = eta.apply(acols[t[0]]) * rho.op(t[1]);
    Matrix add = eta.apply(acols[t[1]]) * rho.op(t[0]);
    add *= Scalar(sg);
    rhs2 += add;
    if (mixed2.pass)
      mixed2 = compare_ops("rep-poisson(product-action)",
                           labels_of(space, t), lhs2, rhs2, V);
    return mixed1.pass || mixed2.pass;
  });
  parts.push_back(std::move(mixed1));
  parts.push_back(std::move(mixed2));
  return CheckReport::aggregate("rep-poisson", std::move(parts));
}

CheckReport check_rep_n_hom_lie(const NaryHomNambuSuperalgebra &N,
                                const NaryRepresentation &rep) {
  const NaryActionTensor &rho = rep.rho;
  if (!(rho.algebra() == N.space) || !(rho.module() == rep.module.space))
    throw input_error("check_rep_n_hom_lie: space mismatch");
  if (rho.arity() != N.n - 1)
    throw input_error("check_rep_n_hom_lie: action arity mismatch");
  const LinearMap &alpha = N.alpha(); // rejects distinct twisting maps
  const SuperSpace &space = N.space;
  const SuperSpace &V = rep.module.space;
  const std::size_t n = N.n;
  const Matrix &av = rep.module.alpha_v.entries();
  const auto acols = alpha_columns(alpha);

  std::vector<CheckReport> parts;
  parts.push_back(is_even(rho, "rho"));
  parts.push_back(check_alternating(rho, "rho"));

  // rho(aX) rho(Y) - (-1)^{|X||Y|} rho(aY) rho(X) =
  //   sum_i (-1)^{|X||Y|^{i-1}} rho(aY with [X,y_i] in slot i) a_V
  CheckReport eq1 = CheckReport::ok("rep-n-lie(fundamental)");
  for_each_tuple(space.dim(), 2 * (n - 1),
                 [&](std::span<const std::size_t> t) {
                   const auto xs = t.subspan(0, n - 1);
                   const auto ys = t.subspan(n - 1, n - 1);
                   const Parity px = space.tuple_parity(xs);
                   const Parity py = space.tuple_parity(ys);

                   std::vector<Vector> args(n - 1);
                   for (std::size_t k = 0; k < n - 1; ++k)
                     args[k] = acols[xs[k]];
                   const Matrix rax = rho.apply(args);
                   for (std::size_t k = 0; k < n - 1; ++k)
                     args[k] = acols[ys[k]];
                   const Matrix ray = rho.apply(args);

                   Matrix lhs = rax * rho.op(ys);
                   Matrix sub = ray * rho.op(xs);
                   sub *= Scalar(sign_of(px * py));
                   lhs -= sub;

                   Matrix rhs(V.dim(), V.dim());
                   std::vector<std::size_t> inner(xs.begin(), xs.end());
                   inner.push_back(0);
                   for (std::size_t i = 0; i < n - 1; ++i) {
                     inner.back() = ys[i];
                     for (std::size_t k = 0; k < n - 1; ++k)
                       args[k] = (k == i) ? N.bracket.value_at(inner)
                                          : acols[ys[k]];
                     Matrix term = rho.apply(args) * av;
                     Parity prefix;
                     for (std::size_t k = 0; k < i; ++k)
                       prefix = prefix + space.parity(ys[k]);
                     term *= Scalar(sign_of(px * prefix));
                     rhs += term;
                   }

                   eq1 = compare_ops("rep-n-lie(fundamental)",
                                     labels_of(space, t), lhs, rhs, V);
                   return eq1.pass;
                 });
  parts.push_back(std::move(eq1));

  // rho(aX, [Y]) a_V = sum_i (-1)^{n-i}
  //   (-1)^{|X|(|Y|+|y_i|)+|y_i||Y|_{i+1}} rho(aY minus y_i) rho(X, y_i)
  CheckReport eq2 = CheckReport::ok("rep-n-lie(bracket-slot)");
  for_each_tuple(
      space.dim(), (n - 2) + n, [&](std::span<const std::size_t> t) {
        const auto xs = t.subspan(0, n - 2);
        const auto ys = t.subspan(n - 2, n);
        const Parity px = space.tuple_parity(xs);
        const Parity py = space.tuple_parity(ys);

        std::vector<Vector> args(n - 1);
        for (std::size_t k = 0; k < n - 2; ++k)
          args[k] = acols[xs[k]];
        args[n - 2] = N.bracket.value_at(ys);
        const Matrix lhs = rho.apply(args) * av;

        Matrix rhs(V.dim(), V.dim());
        std::vector<std::size_t> inner(n - 1);
        for (std::size_t k = 0; k < n - 2; ++k)
          inner[k] = xs[k];
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t r = 0;
          for (std::size_t k = 0; k < n; ++k)
            if (k != i)
              args[r++] = acols[ys[k]];
          inner[n - 2] = ys[i];
          Matrix term = rho.apply(args) * rho.op(inner);
          Parity suffix;
          for (std::size_t k = i + 1; k < n; ++k)
            suffix = suffix + space.parity(ys[k]);
          Parity e = px * (py + space.parity(ys[i])) +
                     space.parity(ys[i]) * suffix;
          int sign = ((n - 1 - i) % 2 == 0) ? 1 : -1; // (-1)^{n-(i+1)}
          term *= Scalar(sign * sign_of(e));
          rhs += term;
        }

        eq2 = compare_ops("rep-n-lie(bracket-slot)", labels_of(space, t),
                          lhs, rhs, V);
        return eq2.pass;
      });
  parts.push_back(std::move(eq2));
  return CheckReport::aggregate("rep-n-hom-lie", std::move(parts));
}

CheckReport check_rep_nary_poisson(const NaryHomNambuPoissonSuperalgebra &P,
                                   const NaryRepresentation &rep) {
  if (!rep.eta)
    throw input_error("check_rep_nary_poisson: representation carries no "
                      "eta");
  const NaryActionTensor &rho = rep.rho;
  const ActionTensor &eta = *rep.eta;
  const SuperSpace &space = P.base.space;
  const SuperSpace &V = rep.module.space;
  const std::size_t n = P.base.n;
  const LinearMap &alpha = P.base.alpha();
  const Matrix &av = rep.module.alpha_v.entries();
  const auto acols = alpha_columns(alpha);

  BinaryRepresentation assoc_rep{rep.module, rep.eta, std::nullopt};

  std::vector<CheckReport> parts;
  parts.push_back(check_rep_n_hom_lie(P.base, rep));
  parts.push_back(check_rep_assoc(P.associative_part(), assoc_rep));

  // eta([X,y]) a_V = rho(aX) eta(y) - (-1)^{|y||X|} eta(a y) rho(X)
  CheckReport cond1 = CheckReport::ok("rep-nary-poisson(bracket-action)");
  for_each_tuple(space.dim(), n, [&](std::span<const std::size_t> t) {
    const auto xs = t.subspan(0, n - 1);
    const std::size_t y = t[n - 1];
    const Parity px = space.tuple_parity(xs);

    const Matrix lhs = eta.apply(P.base.bracket.value_at(t)) * av;
    std::vector<Vector> args(n - 1);
    for (std::size_t k = 0; k < n - 1; ++k)
      args[k] = acols[xs[k]];
    Matrix rhs = rho.apply(args) * eta.op(y);
    Matrix sub = eta.apply(acols[y]) * rho.op(xs);
    sub *= Scalar(sign_of(space.parity(y) * px));
    rhs -= sub;

    cond1 = compare_ops("rep-nary-poisson(bracket-action)",
                        labels_of(space, t), lhs, rhs, V);
    return cond1.pass;
  });
  parts.push_back(std::move(cond1));

  // rho(aX, mu(y,z)) a_V = (-1)^{|y||X|} eta(a y) rho(X, z)
  //                        + (-1)^{|z|(|X|+|y|)} eta(a z) rho(X, y)
  CheckReport cond2 = CheckReport::ok("rep-nary-poisson(product-slot)");
  for_each_tuple(space.dim(), n, [&](std::span<const std::size_t> t) {
    const auto xs = t.subspan(0, n - 2);
    const std::size_t y = t[n - 2], z = t[n - 1];
    const Parity px = space.tuple_parity(xs);
    const std::size_t yz[2] = {y, z};

    std::vector<Vector> args(n - 1);
    for (std::size_t k = 0; k < n - 2; ++k)
      args[k] = acols[xs[k]];
    args[n - 2] = P.mu.value_at(yz);
    const Matrix lhs = rho.apply(args) * av;

    std::vector<std::size_t> inner(xs.begin(), xs.end());
    inner.push_back(z);
    Matrix rhs = eta.apply(acols[y]) * rho.op(inner);
    rhs *= Scalar(sign_of(space.parity(y) * px));
    inner.back() = y;
    Matrix second = eta.apply(acols[z]) * rho.op(inner);
    second *= Scalar(sign_of(space.parity(z) * (px + space.parity(y))));
    rhs += second;

    cond2 = compare_ops("rep-nary-poisson(product-slot)",
                        labels_of(space, t), lhs, rhs, V);
    return cond2.pass;
  });
  parts.push_back(std::move(cond2));
  return CheckReport::aggregate("rep-nary-poisson", std::move(parts));
}

namespace {

struct SumSpace {
  SuperSpace total;
  std::size_t adim;
};

SumSpace direct_sum(const SuperSpace &A, const SuperSpace &V) {
  std::vector<std::string> labels = A.labels();
  std::vector<Parity> parities = A.parities();
  for (std::size_t i = 0; i < V.dim(); ++i) {
    if (A.find(V.label(i)))
      throw input_error("semidirect: module label '" + V.label(i) +
                        "' collides with an algebra label");
    labels.push_back(V.label(i));
    parities.push_back(V.parity(i));
  }
  return {SuperSpace(std::move(labels), std::move(parities)), A.dim()};
}

LinearMap sum_twist(const SumSpace &S, const LinearMap &alpha,
                    const LinearMap &alpha_v) {
  const std::size_t d = S.total.dim(), a = S.adim;
  Matrix m(d, d);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j)
      m.at(i, j) = alpha.entries().at(i, j);
  for (std::size_t i = a; i < d; ++i)
    for (std::size_t j = a; j < d; ++j)
      m.at(i, j) = alpha_v.entries().at(i - a, j - a);
  return LinearMap::endo(S.total, std::move(m));
}

void embed_block(Vector &target, const Vector &v, std::size_t offset) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    target[offset + i] = v[i];
}

/// mu(x,y) on A, eta(x)v crossed, zero on V x V.
MultiLinearMap sum_product(const SumSpace &S, const MultiLinearMap &mu,
                           const ActionTensor &eta) {
  const std::size_t d = S.total.dim(), a = S.adim;
  MultiLinearMap out(S.total, 2);
  for_each_tuple(d, 2, [&](std::span<const std::size_t> t) {
    const std::size_t i = t[0], j = t[1];
    Vector v(d);
    if (i < a && j < a) {
      const std::size_t ij[2] = {i, j};
      embed_block(v, mu.value_at(ij), 0);
    } else if (i < a && j >= a) {
      embed_block(v, eta.op(i).column(j - a), a);
    } else if (i >= a && j < a) {
      Vector w = eta.op(j).column(i - a);
      w *= Scalar(sign_of(S.total.parity(i) * S.total.parity(j)));
      embed_block(v, w, a);
    }
    out.set_value(t, v);
    return true;
  });
  return out;
}

/// [x,y] on A, rho(x)v crossed with the graded sign, zero on V x V.
MultiLinearMap sum_bracket2(const SumSpace &S, const MultiLinearMap &bracket,
                            const ActionTensor &rho) {
  const std::size_t d = S.total.dim(), a = S.adim;
  MultiLinearMap out(S.total, 2);
  for_each_tuple(d, 2, [&](std::span<const std::size_t> t) {
    const std::size_t i = t[0], j = t[1];
    Vector v(d);
    if (i < a && j < a) {
      const std::size_t ij[2] = {i, j};
      embed_block(v, bracket.value_at(ij), 0);
    } else if (i < a && j >= a) {
      embed_block(v, rho.op(i).column(j - a), a);
    } else if (i >= a && j < a) {
      Vector w = rho.op(j).column(i - a);
      w *= Scalar(-sign_of(S.total.parity(i) * S.total.parity(j)));
      embed_block(v, w, a);
    }
    out.set_value(t, v);
    return true;
  });
  return out;
}

/// n-ary sum bracket: base bracket on pure algebra tuples, and for one
/// module entry in slot k the term
///   (-1)^{n-k-1} (-1)^{p_k (p_{k+1}+..+p_n)} rho(algebra parts) a_k
/// (0-based k). Two or more module entries give zero.
MultiLinearMap sum_bracket_nary(const SumSpace &S,
                                const MultiLinearMap &bracket,
                                const NaryActionTensor &rho, std::size_t n) {
  const std::size_t d = S.total.dim(), a = S.adim;
  MultiLinearMap out(S.total, n);
  std::vector<std::size_t> apart(n - 1);
  for_each_tuple(d, n, [&](std::span<const std::size_t> t) {
    std::size_t vcount = 0, vslot = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (t[k] >= a) {
        ++vcount;
        vslot = k;
      }
    Vector v(d);
    if (vcount == 0) {
      embed_block(v, bracket.value_at(t), 0);
    } else if (vcount == 1) {
      std::size_t r = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != vslot)
          apart[r++] = t[k];
      Vector w = rho.op(apart).column(t[vslot] - a);
      Parity suffix;
      for (std::size_t k = vslot + 1; k < n; ++k)
        suffix = suffix + S.total.parity(t[k]);
      int sign = ((n - vslot - 1) % 2 == 0) ? 1 : -1;
      sign *= sign_of(S.total.parity(t[vslot]) * suffix);
      w *= Scalar(sign);
      embed_block(v, w, a);
    }
    out.set_value(t, v);
    return true;
  });
  return out;
}

} // namespace

HomAssociativeSuperalgebra semidirect(const HomAssociativeSuperalgebra &A,
                                      const BinaryRepresentation &rep) {
  if (!rep.eta)
    throw input_error("semidirect: representation carries no eta");
  if (!(rep.eta->algebra() == A.space))
    throw input_error("semidirect: space mismatch");
  const SumSpace S = direct_sum(A.space, rep.module.space);
  return HomAssociativeSuperalgebra(S.total, sum_product(S, A.mu, *rep.eta),
                                    sum_twist(S, A.alpha, rep.module.alpha_v),
                                    A.commutative);
}

HomLieSuperalgebra semidirect(const HomLieSuperalgebra &L,
                              const BinaryRepresentation &rep) {
  if (!rep.rho)
    throw input_error("semidirect: representation carries no rho");
  if (!(rep.rho->algebra() == L.space))
    throw input_error("semidirect: space mismatch");
  const SumSpace S = direct_sum(L.space, rep.module.space);
  return HomLieSuperalgebra(S.total, sum_bracket2(S, L.bracket, *rep.rho),
                            sum_twist(S, L.alpha, rep.module.alpha_v));
}

HomPoissonSuperalgebra semidirect(const HomPoissonSuperalgebra &P,
                                  const BinaryRepresentation &rep) {
  if (!rep.eta || !rep.rho)
    throw input_error("semidirect: representation needs eta and rho");
  if (!(rep.eta->algebra() == P.space))
    throw input_error("semidirect: space mismatch");
  const SumSpace S = direct_sum(P.space, rep.module.space);
  return HomPoissonSuperalgebra(
      S.total, sum_bracket2(S, P.bracket, *rep.rho),
      sum_product(S, P.mu, *rep.eta),
      sum_twist(S, P.alpha, rep.module.alpha_v), P.commutative);
}

NaryHomNambuSuperalgebra semidirect(const NaryHomNambuSuperalgebra &N,
                                    const NaryRepresentation &rep) {
  if (!(rep.rho.algebra() == N.space))
    throw input_error("semidirect: space mismatch");
  if (rep.rho.arity() != N.n - 1)
    throw input_error("semidirect: action arity mismatch");
  const SumSpace S = direct_sum(N.space, rep.module.space);
  return NaryHomNambuSuperalgebra(
      S.total, N.n, sum_bracket_nary(S, N.bracket, rep.rho, N.n),
      sum_twist(S, N.alpha(), rep.module.alpha_v), false);
}

NaryHomNambuPoissonSuperalgebra
semidirect(const NaryHomNambuPoissonSuperalgebra &P,
           const NaryRepresentation &rep) {
  if (!rep.eta)
    throw input_error("semidirect: representation carries no eta");
  NaryHomNambuSuperalgebra base = semidirect(P.base, rep);
  const SumSpace S = direct_sum(P.base.space, rep.module.space);
  return NaryHomNambuPoissonSuperalgebra(
      std::move(base), sum_product(S, P.mu, *rep.eta), P.commutative);
}

InducedRep induced_rep(const HomPoissonSuperalgebra &P,
                       const BinaryRepresentation &rep, const Cochain &phi) {
  if (!rep.rho)
    throw input_error("induced_rep: representation carries no rho");
  const ActionTensor &rho = *rep.rho;
  if (!(rho.algebra() == P.space) || !(phi.space() == P.space))
    throw input_error("induced_rep: space mismatch");
  const SuperSpace &space = P.space;
  const SuperSpace &V = rep.module.space;
  const std::size_t n = phi.arity() + 2;

  CheckReport conditions = check_phi_conditions(P.lie_part(), phi);

  NaryActionTensor out(space, V, n - 1);
  std::vector<std::size_t> rest(n - 2);
  for_each_tuple(space.dim(), n - 1, [&](std::span<const std::size_t> t) {
    Matrix acc(V.dim(), V.dim());
    for (std::size_t i = 0; i < n - 1; ++i) {
      std::size_t r = 0;
      for (std::size_t k = 0; k < n - 1; ++k)
        if (k != i)
          rest[r++] = t[k];
      const Scalar w = phi.value_at(rest);
      if (w == 0)
        continue;
      Parity suffix;
      for (std::size_t k = i + 1; k < n - 1; ++k)
        suffix = suffix + space.parity(t[k]);
      int sign = ((n - i - 2) % 2 == 0) ? 1 : -1; // (-1)^{n-(i+1)-1}
      sign *= sign_of(space.parity(t[i]) * suffix);
      Matrix term = rho.op(t[i]);
      Scalar c = w;
      c *= sign;
      term *= c;
      acc += term;
    }
    out.op(t) = std::move(acc);
    return true;
  });

  return InducedRep{NaryRepresentation{rep.module, std::move(out), rep.eta},
                    std::move(conditions)};
}

} // namespace hnk
