#include "hnk/nary.hpp"

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

} // namespace

NaryHomNambuSuperalgebra::NaryHomNambuSuperalgebra(
    SuperSpace s, std::size_t arity, MultiLinearMap b,
    std::vector<LinearMap> alpha_family, bool multiplicative_claim)
    : space(std::move(s)), n(arity), bracket(std::move(b)),
      alphas(std::move(alpha_family)), multiplicative(multiplicative_claim) {
  if (n < 2)
    throw input_error("NaryHomNambuSuperalgebra: arity must be at least 2");
  if (!(bracket.space() == space) || bracket.arity() != n)
    throw input_error("NaryHomNambuSuperalgebra: bracket shape mismatch");
  if (alphas.size() != n - 1)
    throw input_error(
        "NaryHomNambuSuperalgebra: expected n-1 twisting maps");
  for (const auto &a : alphas)
    if (!(a.domain() == space) || !(a.codomain() == space))
      throw input_error("NaryHomNambuSuperalgebra: twisting map mismatch");
  if (multiplicative && !uniform())
    throw input_error("NaryHomNambuSuperalgebra: multiplicative claim "
                      "requires equal twisting maps");
}

NaryHomNambuSuperalgebra::NaryHomNambuSuperalgebra(SuperSpace s,
                                                   std::size_t arity,
                                                   MultiLinearMap b,
                                                   const LinearMap &alpha,
                                                   bool multiplicative_claim)
    : NaryHomNambuSuperalgebra(
          std::move(s), arity, std::move(b),
          std::vector<LinearMap>(arity - 1, alpha), multiplicative_claim) {}

bool NaryHomNambuSuperalgebra::uniform() const {
  for (std::size_t i = 1; i < alphas.size(); ++i)
    if (!(alphas[i] == alphas[0]))
      return false;
  return true;
}

const LinearMap &NaryHomNambuSuperalgebra::alpha() const {
  if (!uniform())
    throw input_error("n-ary structure has distinct twisting maps; only the "
                      "uniform (multiplicative) case is supported here");
  return alphas[0];
}

NaryHomNambuPoissonSuperalgebra::NaryHomNambuPoissonSuperalgebra(
    NaryHomNambuSuperalgebra b, MultiLinearMap m, bool comm)
    : base(std::move(b)), mu(std::move(m)), commutative(comm) {
  if (!(mu.space() == base.space) || mu.arity() != 2)
    throw input_error(
        "NaryHomNambuPoissonSuperalgebra: product shape mismatch");
}

CheckReport check_nambu_identity(const NaryHomNambuSuperalgebra &N) {
  const LinearMap &alpha = N.alpha(); // rejects distinct twisting maps
  const SuperSpace &space = N.space;
  const std::size_t n = N.n;
  const auto acols = alpha_columns(alpha);

  CheckReport out = CheckReport::ok("nambu-identity");
  for_each_tuple(space.dim(), 2 * n - 1, [&](std::span<const std::size_t> t) {
    const auto xs = t.subspan(0, n - 1);
    const auto ys = t.subspan(n - 1, n);
    const Parity px = space.tuple_parity(xs);

    std::vector<Vector> args(n);
    for (std::size_t k = 0; k < n - 1; ++k)
      args[k] = acols[xs[k]];
    args[n - 1] = N.bracket.value_at(ys);
    const Vector lhs = eval_multilinear(N.bracket, args);

    Vector rhs(space.dim());
    std::vector<std::size_t> inner(n);
    for (std::size_t k = 0; k < n - 1; ++k)
      inner[k] = xs[k];
    for (std::size_t i = 0; i < n; ++i) {
      inner[n - 1] = ys[i];
      for (std::size_t k = 0; k < n; ++k)
        args[k] = (k == i) ? N.bracket.value_at(inner) : acols[ys[k]];
      Vector term = eval_multilinear(N.bracket, args);
      Parity prefix; // |Y|^{i-1}
      for (std::size_t k = 0; k < i; ++k)
        prefix = prefix + space.parity(ys[k]);
      term *= Scalar(sign_of(px * prefix));
      rhs += term;
    }

    if (lhs == rhs)
      return true;
    out = CheckReport::fail("nambu-identity", labels_of(space, t),
                            format_vector(space, lhs),
                            format_vector(space, rhs));
    return false;
  });
  return out;
}

CheckReport check_nary_skew(const NaryHomNambuSuperalgebra &N) {
  const SuperSpace &space = N.space;
  const std::size_t n = N.n;

  CheckReport adjacent = CheckReport::ok("nary-skew(adjacent)");
  for_each_tuple(space.dim(), n, [&](std::span<const std::size_t> t) {
    for (std::size_t s = 0; s + 1 < n; ++s) {
      std::vector<std::size_t> sw(t.begin(), t.end());
      std::swap(sw[s], sw[s + 1]);
      const int sign = -sign_of(space.parity(t[s]) * space.parity(t[s + 1]));
      Vector rhs = N.bracket.value_at(sw);
      rhs *= Scalar(sign);
      const Vector lhs = N.bracket.value_at(t);
      if (lhs == rhs)
        continue;
      adjacent = CheckReport::fail(
          "nary-skew(adjacent)", labels_of(space, t),
          format_vector(space, lhs), format_vector(space, rhs),
          "swap of slots " + std::to_string(s + 1) + "," +
              std::to_string(s + 2));
      return false;
    }
    return true;
  });

  // general transposition form, with sign
  // -(-1)^{|X|_{i+1}^{j-1}(|x_i|+|x_j|)+|x_i||x_j|}
  CheckReport general = CheckReport::ok("nary-skew(transposition)");
  for_each_tuple(space.dim(), n, [&](std::span<const std::size_t> t) {
    const ParityBook book(space, t);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        std::vector<std::size_t> sw(t.begin(), t.end());
        std::swap(sw[i - 1], sw[j - 1]);
        const Parity e = book.range(i + 1, j - 1) * (book.at(i) + book.at(j)) +
                         book.at(i) * book.at(j);
        Vector rhs = N.bracket.value_at(sw);
        rhs *= Scalar(-sign_of(e));
        const Vector lhs = N.bracket.value_at(t);
        if (lhs == rhs)
          continue;
        general = CheckReport::fail(
            "nary-skew(transposition)", labels_of(space, t),
            format_vector(space, lhs), format_vector(space, rhs),
            "transposition of slots " + std::to_string(i) + "," +
                std::to_string(j));
        return false;
      }
    return true;
  });

  std::vector<CheckReport> parts;
  parts.push_back(std::move(adjacent));
  parts.push_back(std::move(general));
  return CheckReport::aggregate("nary-skew", std::move(parts));
}

CheckReport
check_nary_hom_leibniz_form(const NaryHomNambuPoissonSuperalgebra &P,
                            NaryLeibnizForm form) {
  const NaryHomNambuSuperalgebra &N = P.base;
  const LinearMap &alpha = N.alpha();
  const SuperSpace &space = N.space;
  const std::size_t n = N.n;
  const auto acols = alpha_columns(alpha);
  const char *name = form == NaryLeibnizForm::primary
                         ? "nary-hom-leibniz"
                         : "nary-hom-leibniz-variant";

  CheckReport out = CheckReport::ok(name);
  for_each_tuple(space.dim(), n + 1, [&](std::span<const std::size_t> t) {
    const auto xs = t.subspan(0, n - 1);
    const std::size_t y = t[n - 1], z = t[n];
    const Parity px = space.tuple_parity(xs);

    std::vector<Vector> args(n);
    for (std::size_t k = 0; k < n - 1; ++k)
      args[k] = acols[xs[k]];
    const std::size_t yz[2] = {y, z};
    args[n - 1] = P.mu.value_at(yz);
    const Vector lhs = eval_multilinear(N.bracket, args);

    std::vector<std::size_t> inner(xs.begin(), xs.end());
    inner.push_back(z);
    const Vector bz = N.bracket.value_at(inner);
    inner.back() = y;
    const Vector by = N.bracket.value_at(inner);

    Vector rhs(space.dim());
    if (form == NaryLeibnizForm::primary) {
      const Vector a1[2] = {acols[y], bz};
      Vector first = eval_multilinear(P.mu, a1);
      first *= Scalar(sign_of(space.parity(y) * px));
      const Vector a2[2] = {by, acols[z]};
      rhs = first + eval_multilinear(P.mu, a2);
    } else {
      const Vector a1[2] = {bz, acols[y]};
      Vector first = eval_multilinear(P.mu, a1);
      first *= Scalar(sign_of(space.parity(y) * space.parity(z)));
      const Vector a2[2] = {by, acols[z]};
      rhs = first + eval_multilinear(P.mu, a2);
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

CheckReport check_nary_hom_leibniz(const NaryHomNambuPoissonSuperalgebra &P) {
  CheckReport primary =
      check_nary_hom_leibniz_form(P, NaryLeibnizForm::primary);
  if (!P.commutative) {
    std::vector<CheckReport> parts;
    parts.push_back(std::move(primary));
    return CheckReport::aggregate("nary-hom-leibniz", std::move(parts));
  }
  const CheckReport variant =
      check_nary_hom_leibniz_form(P, NaryLeibnizForm::variant);
  CheckReport agreement = CheckReport::ok("nary-leibniz-forms-agree");
  if (primary.pass != variant.pass)
    agreement = CheckReport::fail(
        "nary-leibniz-forms-agree", {}, primary.pass ? "pass" : "fail",
        variant.pass ? "pass" : "fail",
        "the two Leibniz forms must agree on a commutative product");
  std::vector<CheckReport> parts;
  parts.push_back(std::move(primary));
  parts.push_back(std::move(agreement));
  return CheckReport::aggregate("nary-hom-leibniz", std::move(parts));
}

CheckReport check_nary_poisson(const NaryHomNambuPoissonSuperalgebra &P) {
  std::vector<CheckReport> parts;
  parts.push_back(check_nary_skew(P.base));
  parts.push_back(check_nambu_identity(P.base));
  parts.push_back(check_hom_associative(P.associative_part()));
  parts.push_back(check_nary_hom_leibniz(P));
  return CheckReport::aggregate("nary-poisson", std::move(parts));
}

CheckReport check_multiplicative(const NaryHomNambuSuperalgebra &N) {
  std::vector<CheckReport> parts;
  parts.push_back(multiplicativity_scan(N.alpha(), N.bracket, "bracket"));
  return CheckReport::aggregate("multiplicative", std::move(parts));
}

CheckReport check_multiplicative(const NaryHomNambuPoissonSuperalgebra &P) {
  std::vector<CheckReport> parts;
  parts.push_back(
      multiplicativity_scan(P.base.alpha(), P.base.bracket, "bracket"));
  parts.push_back(multiplicativity_scan(P.base.alpha(), P.mu, "mu"));
  return CheckReport::aggregate("multiplicative", std::move(parts));
}

LinearMap adjoint_nary(std::span<const Vector> X,
                       const NaryHomNambuSuperalgebra &N) {
  if (X.size() != N.n - 1)
    throw input_error("adjoint_nary: expected n-1 elements");
  for (const auto &x : X) {
    if (x.dim() != N.space.dim())
      throw input_error("adjoint_nary: space mismatch");
    if (!homogeneous_parity(N.space, x))
      throw input_error("adjoint_nary: element is not homogeneous");
  }
  Matrix m(N.space.dim(), N.space.dim());
  std::vector<Vector> args(X.begin(), X.end());
  args.emplace_back();
  for (std::size_t j = 0; j < N.space.dim(); ++j) {
    args.back() = basis_vector(N.space, j);
    const Vector col = eval_multilinear(N.bracket, args);
    for (std::size_t r = 0; r < N.space.dim(); ++r)
      m.at(r, j) = col[r];
  }
  return LinearMap::endo(N.space, std::move(m));
}

} // namespace hnk
