#pragma once

// Representation fixtures for the semidirect equivalence suites: at
// every structure level, at least three valid actions and three
// deliberately corrupted ones, each tagged with its expected verdict.

#include "fixtures.hpp"

namespace fx {

inline Matrix block_diag(const Matrix &a, const Matrix &b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

inline HomModule double_module(const HomModule &m) {
  const SuperSpace second = relabel(m.space, "w");
  std::vector<std::string> labels = m.space.labels();
  std::vector<Parity> parities = m.space.parities();
  for (std::size_t i = 0; i < second.dim(); ++i) {
    labels.push_back(second.label(i));
    parities.push_back(second.parity(i));
  }
  SuperSpace total(std::move(labels), std::move(parities));
  Matrix av = block_diag(m.alpha_v.entries(), m.alpha_v.entries());
  return HomModule(total, LinearMap::endo(total, std::move(av)));
}

inline ActionTensor double_action(const ActionTensor &t,
                                  const HomModule &doubled) {
  ActionTensor out(t.algebra(), doubled.space);
  for (std::size_t i = 0; i < t.algebra().dim(); ++i)
    out.op(i) = block_diag(t.op(i), t.op(i));
  return out;
}

inline NaryRepresentation wrap_arity1(const BinaryRepresentation &rep) {
  NaryActionTensor rho(rep.rho->algebra(), rep.rho->module(), 1);
  for (std::size_t i = 0; i < rep.rho->algebra().dim(); ++i) {
    const std::size_t idx[1] = {i};
    rho.op(idx) = rep.rho->op(i);
  }
  return NaryRepresentation{rep.module, std::move(rho), rep.eta};
}

// ---- commutative Hom-associative level -----------------------------------

struct AssocFixture {
  std::string name;
  bool expect_pass;
  BinaryRepresentation rep;
};

struct AssocLevel {
  HomAssociativeSuperalgebra base = unital2();
  std::vector<AssocFixture> fixtures;
};

inline AssocLevel assoc_level() {
  AssocLevel lvl;
  const auto &U = lvl.base;
  const HomModule M = self_module(U.space, U.alpha);
  const ActionTensor reg = regular_action(U, M.space);

  lvl.fixtures.push_back(
      {"zero action", true,
       BinaryRepresentation{M, ActionTensor(U.space, M.space), std::nullopt}});
  lvl.fixtures.push_back({"regular action", true,
                          BinaryRepresentation{M, reg, std::nullopt}});
  const HomModule M2 = double_module(M);
  lvl.fixtures.push_back(
      {"doubled regular action", true,
       BinaryRepresentation{M2, double_action(reg, M2), std::nullopt}});

  auto c1 = reg;
  c1.op(0).at(0, 0) = 2; // scale eta(e1) v1
  lvl.fixtures.push_back({"scaled unit column", false,
                          BinaryRepresentation{M, std::move(c1), std::nullopt}});
  auto c2 = reg;
  c2.op(1).at(1, 0) = 0; // erase eta(e2) v1
  lvl.fixtures.push_back({"erased action entry", false,
                          BinaryRepresentation{M, std::move(c2), std::nullopt}});
  auto c3 = reg;
  c3.op(0).at(1, 1) = 3; // scale eta(e1) v2
  lvl.fixtures.push_back({"skewed unit action", false,
                          BinaryRepresentation{M, std::move(c3), std::nullopt}});
  return lvl;
}

// ---- Hom-Lie level ---------------------------------------------------------

struct LieFixture {
  std::string name;
  bool expect_pass;
  BinaryRepresentation rep;
};

struct LieLevel {
  HomLieSuperalgebra base = lie2(1);
  std::vector<LieFixture> fixtures;
};

inline LieLevel lie_level() {
  LieLevel lvl;
  const auto &L = lvl.base;
  const HomModule M = self_module(L.space, L.alpha);
  const ActionTensor ad = adjoint_action(L, M.space);

  lvl.fixtures.push_back(
      {"zero action", true,
       BinaryRepresentation{M, std::nullopt, ActionTensor(L.space, M.space)}});
  lvl.fixtures.push_back({"adjoint action", true,
                          BinaryRepresentation{M, std::nullopt, ad}});
  const HomModule M2 = double_module(M);
  lvl.fixtures.push_back(
      {"doubled adjoint action", true,
       BinaryRepresentation{M2, std::nullopt, double_action(ad, M2)}});

  auto c1 = ad;
  c1.op(0).at(0, 0) = 1; // rho(e1) picks up a projector
  lvl.fixtures.push_back({"projector on the even slot", false,
                          BinaryRepresentation{M, std::nullopt, std::move(c1)}});
  auto c2 = ad;
  c2.op(1).at(1, 0) = 1; // rho(e2) v1 = v2 now squares to 2 v1
  lvl.fixtures.push_back({"squaring odd action", false,
                          BinaryRepresentation{M, std::nullopt, std::move(c2)}});
  auto c3 = ad;
  c3.op(0) = Matrix::identity(2); // rho(e1) = id
  lvl.fixtures.push_back({"identity on the even slot", false,
                          BinaryRepresentation{M, std::nullopt, std::move(c3)}});
  return lvl;
}

// ---- Hom-Poisson level -----------------------------------------------------

struct PoissonFixture {
  std::string name;
  bool expect_pass;
  BinaryRepresentation rep;
};

struct PoissonLevel {
  HomPoissonSuperalgebra base = unital2_poisson();
  std::vector<PoissonFixture> fixtures;
};

inline PoissonLevel poisson_level() {
  PoissonLevel lvl;
  const auto &P = lvl.base;
  const HomModule M = self_module(P.space, P.alpha);
  const ActionTensor reg = regular_action(P.associative_part(), M.space);
  const ActionTensor ad = adjoint_action(P.lie_part(), M.space);

  lvl.fixtures.push_back(
      {"zero actions", true,
       BinaryRepresentation{M, ActionTensor(P.space, M.space),
                            ActionTensor(P.space, M.space)}});
  lvl.fixtures.push_back({"adjoint and regular actions", true,
                          BinaryRepresentation{M, reg, ad}});
  const HomModule M2 = double_module(M);
  lvl.fixtures.push_back(
      {"doubled actions", true,
       BinaryRepresentation{M2, double_action(reg, M2),
                            double_action(ad, M2)}});

  auto bad_rho = ad;
  bad_rho.op(1).at(0, 1) = 4; // rescale ad(e2) v2
  lvl.fixtures.push_back({"rescaled bracket action", false,
                          BinaryRepresentation{M, reg, std::move(bad_rho)}});
  auto bad_eta = reg;
  bad_eta.op(0).at(0, 0) = 2;
  lvl.fixtures.push_back({"rescaled product action", false,
                          BinaryRepresentation{M, std::move(bad_eta), ad}});
  lvl.fixtures.push_back(
      {"dropped product action", false,
       BinaryRepresentation{M, ActionTensor(P.space, M.space), ad}});
  return lvl;
}

// ---- n-Hom-Lie level (ternary) --------------------------------------------

struct NaryFixture {
  std::string name;
  bool expect_pass;
  NaryRepresentation rep;
};

struct NaryLieLevel {
  NaryHomNambuSuperalgebra base = f_induced3();
  std::vector<NaryFixture> fixtures;
};

inline NaryRepresentation f_rho_phi() {
  const auto Lf = f_algebra();
  const HomPoissonSuperalgebra P(Lf.space, Lf.bracket,
                                 MultiLinearMap::zero(Lf.space, 2), Lf.alpha,
                                 true);
  const HomModule M = self_module(Lf.space, Lf.alpha);
  const BinaryRepresentation ad{M, std::nullopt,
                                adjoint_action(Lf, M.space)};
  return induced_rep(P, ad, phi_f()).rep;
}

inline NaryLieLevel nary_lie_level() {
  NaryLieLevel lvl;
  const SuperSpace &A = lvl.base.space;
  const HomModule M = self_module(A, lvl.base.alpha());
  const NaryRepresentation ind = f_rho_phi();

  lvl.fixtures.push_back(
      {"zero action", true,
       NaryRepresentation{M, NaryActionTensor(A, M.space, 2), std::nullopt}});
  lvl.fixtures.push_back({"induced adjoint action", true, ind});

  // conjugated copy: an even change of module basis preserves validity
  NaryRepresentation conj = ind;
  Matrix S = Matrix::identity(4);
  S.at(0, 0) = 2;
  const Matrix Sinv = *S.inverse();
  for_each_tuple(A.dim(), 2, [&](std::span<const std::size_t> t) {
    conj.rho.op(t) = S * ind.rho.op(t) * Sinv;
    return true;
  });
  lvl.fixtures.push_back({"conjugated induced action", true, std::move(conj)});

  auto c1 = ind;
  const std::size_t t12[2] = {0, 1};
  c1.rho.op(t12).at(0, 0) = 1; // breaks alternation on (f1,f2)
  lvl.fixtures.push_back({"broken alternation", false, std::move(c1)});
  auto c2 = ind;
  const std::size_t t23[2] = {1, 2};
  c2.rho.op(t23) *= Scalar(2); // one slot pair rescaled
  lvl.fixtures.push_back({"rescaled slot pair", false, std::move(c2)});
  auto c3 = ind;
  const std::size_t t11[2] = {0, 0};
  c3.rho.op(t11).at(0, 0) = 1; // nonzero on a repeated even pair
  lvl.fixtures.push_back({"repeated-slot action", false, std::move(c3)});
  return lvl;
}

// ---- n-ary Poisson level ---------------------------------------------------

struct NaryPoissonFixture {
  std::string name;
  bool expect_pass;
  NaryHomNambuPoissonSuperalgebra base;
  NaryRepresentation rep;
};

inline std::vector<NaryPoissonFixture> nary_poisson_level() {
  std::vector<NaryPoissonFixture> out;

  const NaryHomNambuPoissonSuperalgebra FP(
      f_induced3(), MultiLinearMap::zero(space4_f(), 2), true);
  const HomModule MF = self_module(FP.base.space, FP.base.alpha());
  const NaryRepresentation ind = f_rho_phi();

  out.push_back({"induced action with zero product", true, FP,
                 NaryRepresentation{MF, ind.rho,
                                    ActionTensor(FP.base.space, MF.space)}});
  out.push_back({"zero actions", true, FP,
                 NaryRepresentation{MF,
                                    NaryActionTensor(FP.base.space, MF.space, 2),
                                    ActionTensor(FP.base.space, MF.space)}});

  const auto U = unital2();
  const NaryHomNambuPoissonSuperalgebra ZP(
      NaryHomNambuSuperalgebra(U.space, 3, MultiLinearMap::zero(U.space, 3),
                               LinearMap::identity(U.space), true),
      U.mu, true);
  const HomModule MU = self_module(U.space, U.alpha);
  out.push_back({"regular product action on the zero bracket", true, ZP,
                 NaryRepresentation{MU,
                                    NaryActionTensor(U.space, MU.space, 2),
                                    regular_action(U, MU.space)}});

  NaryRepresentation bad1{MF, ind.rho, ActionTensor(FP.base.space, MF.space)};
  bad1.eta->op(0).at(0, 0) = 1; // eta(f1) projector against the zero product
  out.push_back({"phantom product action", false, FP, std::move(bad1)});

  NaryRepresentation bad2{MF, ind.rho, ActionTensor(FP.base.space, MF.space)};
  const std::size_t t12[2] = {0, 1};
  bad2.rho.op(t12).at(0, 0) = 1;
  out.push_back({"broken alternation with zero product", false, FP,
                 std::move(bad2)});

  NaryRepresentation bad3{MU, NaryActionTensor(U.space, MU.space, 2),
                          regular_action(U, MU.space)};
  bad3.eta->op(0).at(0, 0) = 3;
  out.push_back({"rescaled regular action", false, ZP, std::move(bad3)});

  return out;
}

} // namespace fx
