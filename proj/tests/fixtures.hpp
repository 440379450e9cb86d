#pragma once

// Shared fixtures: the worked examples used across the test suites,
// built programmatically so every suite agrees on the same data.

#include <string>
#include <utility>
#include <vector>

#include "hnk/constructions.hpp"
#include "hnk/representations.hpp"

namespace fx {

using namespace hnk;

using Combo = std::vector<std::pair<std::string, Scalar>>;

inline void set_entry(MultiLinearMap &m, const std::vector<std::string> &args,
                      const Combo &value) {
  const SuperSpace &s = m.space();
  std::vector<std::size_t> idx;
  for (const auto &a : args)
    idx.push_back(s.index_of(a));
  Vector v(s.dim());
  for (const auto &[label, c] : value)
    v[s.index_of(label)] = c;
  m.set_value(idx, v);
}

inline void set_column(LinearMap &f, const std::string &arg,
                       const Combo &value) {
  const SuperSpace &s = f.domain();
  const std::size_t i = s.index_of(arg);
  for (std::size_t r = 0; r < s.dim(); ++r)
    f.entries().at(r, i) = 0;
  for (const auto &[label, c] : value)
    f.entries().at(s.index_of(label), i) = c;
}

inline Vector vec(const SuperSpace &s, const Combo &value) {
  Vector v(s.dim());
  for (const auto &[label, c] : value)
    v[s.index_of(label)] = c;
  return v;
}

inline SuperSpace relabel(const SuperSpace &s, const std::string &prefix) {
  std::vector<std::string> labels;
  for (const auto &l : s.labels())
    labels.push_back(prefix + l);
  return SuperSpace(labels, s.parities());
}

// 3-dimensional Hom-associative structure: two even generators, one odd;
// mu(e1,e2) = -e1, mu(e2,e2) = e1+e2; alpha(e1) = -e1,
// alpha(e2) = e1+e2, alpha(e3) = 0.
inline SuperSpace space3_mixed() {
  return SuperSpace({"e1", "e2", "e3"}, {Parity(0), Parity(0), Parity(1)});
}

inline HomAssociativeSuperalgebra assoc3() {
  const SuperSpace s = space3_mixed();
  MultiLinearMap mu(s, 2);
  set_entry(mu, {"e1", "e2"}, {{"e1", -1}});
  set_entry(mu, {"e2", "e2"}, {{"e1", 1}, {"e2", 1}});
  LinearMap alpha = LinearMap::zero(s, s);
  set_column(alpha, "e1", {{"e1", -1}});
  set_column(alpha, "e2", {{"e1", 1}, {"e2", 1}});
  return HomAssociativeSuperalgebra(s, std::move(mu), std::move(alpha),
                                    false);
}

// Same data completed to a super-commutative product.
inline HomAssociativeSuperalgebra assoc3_commutative() {
  HomAssociativeSuperalgebra A = assoc3();
  set_entry(A.mu, {"e2", "e1"}, {{"e1", -1}});
  A.commutative = true;
  return A;
}

// 2-dimensional Hom-Lie structure over one even and one odd generator:
// [e2,e2] = 2 lambda e1, alpha = lambda id.
inline SuperSpace space2_superline() {
  return SuperSpace({"e1", "e2"}, {Parity(0), Parity(1)});
}

inline HomLieSuperalgebra lie2(const Scalar &lambda) {
  const SuperSpace s = space2_superline();
  MultiLinearMap bracket(s, 2);
  set_entry(bracket, {"e2", "e2"}, {{"e1", 2 * lambda}});
  return HomLieSuperalgebra(s, std::move(bracket),
                            LinearMap::diagonal(s, {lambda, lambda}));
}

// 3-dimensional non-commutative Hom-Poisson structure:
// mu(e1,e2) = e1, mu(e2,e2) = e1+e2, [e1,e2] = e1 (skew-completed),
// alpha(e1) = e1, alpha(e2) = e1+e2, alpha(e3) = 0.
inline SuperSpace space3_poisson() {
  return SuperSpace({"e1", "e2", "e3"}, {Parity(0), Parity(0), Parity(1)});
}

inline HomPoissonSuperalgebra poisson3() {
  const SuperSpace s = space3_poisson();
  MultiLinearMap mu(s, 2);
  set_entry(mu, {"e1", "e2"}, {{"e1", 1}});
  set_entry(mu, {"e2", "e2"}, {{"e1", 1}, {"e2", 1}});
  MultiLinearMap bracket(s, 2);
  set_entry(bracket, {"e1", "e2"}, {{"e1", 1}});
  set_entry(bracket, {"e2", "e1"}, {{"e1", -1}});
  LinearMap alpha = LinearMap::zero(s, s);
  set_column(alpha, "e1", {{"e1", 1}});
  set_column(alpha, "e2", {{"e1", 1}, {"e2", 1}});
  return HomPoissonSuperalgebra(s, std::move(bracket), std::move(mu),
                                std::move(alpha), false);
}

// Commutative unital-style product on the superline: mu(e1,.) = id,
// mu(e2,e2) = 0, alpha = id.
inline HomAssociativeSuperalgebra unital2() {
  const SuperSpace s = space2_superline();
  MultiLinearMap mu(s, 2);
  set_entry(mu, {"e1", "e1"}, {{"e1", 1}});
  set_entry(mu, {"e1", "e2"}, {{"e2", 1}});
  set_entry(mu, {"e2", "e1"}, {{"e2", 1}});
  return HomAssociativeSuperalgebra(s, std::move(mu),
                                    LinearMap::identity(s), true);
}

// Commutative Hom-Poisson structure combining unital2 with the
// superline bracket [e2,e2] = 2 e1.
inline HomPoissonSuperalgebra unital2_poisson() {
  HomAssociativeSuperalgebra A = unital2();
  MultiLinearMap bracket(A.space, 2);
  set_entry(bracket, {"e2", "e2"}, {{"e1", 2}});
  return HomPoissonSuperalgebra(A.space, std::move(bracket), A.mu, A.alpha,
                                true);
}

// Dual of e1 on the superline.
inline Cochain phi_e1() {
  Cochain phi(space2_superline(), 1);
  const std::size_t idx[1] = {0};
  phi.value_at(idx) = 1;
  return phi;
}

// The induced ternary bracket on the superline (lambda = 1).
inline NaryHomNambuSuperalgebra induced3() {
  return induced_nary_bracket(lie2(1), phi_e1());
}

// dim-4 Hom-Lie structure whose bracket values avoid the support of the
// dual functional phi_f: [f3,f4] = f1 = [f4,f3], alpha = id, phi = f2*.
// Here the full set of induced-bracket conditions holds.
inline SuperSpace space4_f() {
  return SuperSpace({"f1", "f2", "f3", "f4"},
                    {Parity(0), Parity(0), Parity(1), Parity(1)});
}

inline HomLieSuperalgebra f_algebra() {
  const SuperSpace s = space4_f();
  MultiLinearMap bracket(s, 2);
  set_entry(bracket, {"f3", "f4"}, {{"f1", 1}});
  set_entry(bracket, {"f4", "f3"}, {{"f1", 1}});
  return HomLieSuperalgebra(s, std::move(bracket), LinearMap::identity(s));
}

inline Cochain phi_f() {
  Cochain phi(space4_f(), 1);
  const std::size_t idx[1] = {1};
  phi.value_at(idx) = 1;
  return phi;
}

inline NaryHomNambuSuperalgebra f_induced3() {
  return induced_nary_bracket(f_algebra(), phi_f());
}

// dim-4 base for the 4-ary induction: [g4,g4] = 2 g1, alpha = id,
// phi(g2,g3) = 1 = -phi(g3,g2).
inline SuperSpace space4_g() {
  return SuperSpace({"g1", "g2", "g3", "g4"},
                    {Parity(0), Parity(0), Parity(0), Parity(1)});
}

inline HomLieSuperalgebra g_algebra() {
  const SuperSpace s = space4_g();
  MultiLinearMap bracket(s, 2);
  set_entry(bracket, {"g4", "g4"}, {{"g1", 2}});
  return HomLieSuperalgebra(s, std::move(bracket), LinearMap::identity(s));
}

inline Cochain phi_g() {
  Cochain phi(space4_g(), 2);
  std::size_t idx[2] = {1, 2};
  phi.value_at(idx) = 1;
  idx[0] = 2;
  idx[1] = 1;
  phi.value_at(idx) = -1;
  return phi;
}

inline NaryHomNambuSuperalgebra g_induced4() {
  return induced_nary_bracket(g_algebra(), phi_g());
}

// Adjoint action of a Hom-Lie structure on a relabeled copy of itself.
inline ActionTensor adjoint_action(const HomLieSuperalgebra &L,
                                   const SuperSpace &module) {
  ActionTensor t(L.space, module);
  for (std::size_t i = 0; i < L.space.dim(); ++i)
    t.op(i) = adjoint(basis_vector(L.space, i), L).entries();
  return t;
}

// Left multiplication action of a Hom-associative structure.
inline ActionTensor regular_action(const HomAssociativeSuperalgebra &A,
                                   const SuperSpace &module) {
  ActionTensor t(A.space, module);
  for (std::size_t i = 0; i < A.space.dim(); ++i) {
    Matrix m(A.space.dim(), A.space.dim());
    for (std::size_t j = 0; j < A.space.dim(); ++j) {
      const std::size_t ij[2] = {i, j};
      const Vector col = A.mu.value_at(ij);
      for (std::size_t r = 0; r < A.space.dim(); ++r)
        m.at(r, j) = col[r];
    }
    t.op(i) = std::move(m);
  }
  return t;
}

// The module (V, alpha_V) = (A, alpha) on fresh labels.
inline HomModule self_module(const SuperSpace &space, const LinearMap &alpha,
                             const std::string &prefix = "v") {
  const SuperSpace m = relabel(space, prefix);
  return HomModule(m, LinearMap::endo(m, alpha.entries()));
}

} // namespace fx
