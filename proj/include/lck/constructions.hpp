#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lck/structures.hpp"

namespace lck {

/// Coadjoint data of a 1-form phi' on g': its stabilizer k, the ideal
/// h = k /\ ker phi' and the Kirillov-Kostant form omega_Q(X,Y) = phi'([X,Y]).
struct OrbitData {
  LieAlgebra g_prime;
  KForm phi_prime;
  Subspace k;
  Subspace h;
  KForm omega_Q;
  bool non_conical = false;
};

inline OrbitData coadjoint_stabilizer(const LieAlgebra& gp, const KForm& phi) {
  const std::size_t n = gp.dim();
  if (phi.degree() != 1 || phi.dim() != n) throw Error(ErrorKind::InvalidArgument, "phi' must be a 1-form on g'");
  if (phi.is_zero()) throw Error(ErrorKind::ZeroForm, "phi' = 0");
  OrbitData o{gp, phi, {}, {}, KForm(n, 2), false};
  // row j, column i: phi'([e_i, e_j]); the stabilizer is the kernel in i
  Mat M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      M(j, i) = phi.evaluate({gp.structure(i, j)});
      if (i < j) o.omega_Q.set({i, j}, M(j, i));
    }
  Locus l;
  const auto ker = nullspace(M, &l);
  o.k = Subspace(n, ker);
  o.k.add_locus(l);
  // ker phi' as a subspace
  Mat row(1, n);
  for (std::size_t i = 0; i < n; ++i) row(0, i) = phi.at({i});
  o.h = o.k.intersect(Subspace(n, nullspace(row)));
  for (const auto& x : o.k.basis())
    if (!phi.evaluate({x}).is_zero()) o.non_conical = true;
  return o;
}

/// lcs structure on g(D) = RD + g' built from a non-conical orbit.
struct OrbitLcs {
  LieAlgebra algebra;  // g(D), with h lifted
  KForm lambda;
  KForm phi;           // phi' extended by phi(D) = 0
  KForm omega;         // -lambda ^ phi + d phi
  LcsData lcs;
  StructureReport report;
};

inline OrbitLcs lcs_from_orbit(const OrbitData& orbit, const Mat& D, std::string new_name = {}) {
  if (!orbit.non_conical) throw Error(ErrorKind::ConicalOrbit, "phi' vanishes on its stabilizer");
  const Extension ext = extend_by_derivation(orbit.g_prime, D, std::move(new_name));
  const std::size_t n = ext.algebra.dim();
  auto lift = [n](const Vec& v) {
    Vec w(n);
    for (std::size_t i = 0; i < v.size(); ++i) w[i + 1] = v[i];
    return w;
  };
  OrbitLcs out{ext.algebra, ext.lambda, KForm(n, 1), KForm(n, 2), {}, StructureReport("orbit construction")};
  std::vector<Vec> h;
  for (const auto& x : orbit.h.basis()) h.push_back(lift(x));
  out.algebra.set_h(h);
  for (std::size_t i = 0; i + 1 < n; ++i) out.phi.set({i + 1}, orbit.phi_prime.at({i}));
  const LieAlgebra& g = out.algebra;
  out.omega = -wedge(out.lambda, out.phi) + ce_d(g, out.phi);

  // ker omega_Q = k
  Locus l;
  const Subspace kerQ(orbit.g_prime.dim(), nullspace(orbit.omega_Q.as_matrix(), &l));
  out.report.add("ker omega_Q = k", kerQ.dim() == orbit.k.dim() && kerQ.contains(orbit.k),
                 "dim " + std::to_string(orbit.k.dim()));
  out.report.add("non-conical", true, "phi' is nonzero on k");
  out.report.add("phi' Ad(h)-invariant", in_relative_complex(g, out.phi), "phi vanishes on h and is h-invariant");
  try {
    out.lcs = lcs_check(g, out.omega, out.lambda);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Degenerate) throw Error(ErrorKind::DegenerateOnQuotient, e.witness());
    throw;
  }
  out.report.append(out.lcs.report, "lcs");
  detail::add_identity(out.report, "d omega = lambda ^ omega (constructed lambda)",
                       detail::zero_form_identity(g, ce_d(g, out.omega) - wedge(out.lambda, out.omega)));
  detail::add_identity(out.report, "lee form equals lambda",
                       detail::zero_form_identity(g, out.lcs.lambda - out.lambda));
  detail::add_identity(out.report, "omega(Z,.) = phi(Z) lambda",
                       detail::zero_form_identity(
                           g, interior(out.lcs.Z, out.omega) - out.phi.evaluate({out.lcs.Z}) * out.lambda));
  out.report.skip("closed subgroups H, K", "global hypothesis, not decidable from structure constants");
  out.report.exclude(out.lcs.excluded);
  return out;
}

}  // namespace lck
