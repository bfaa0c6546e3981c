// End-to-end acceptance run: one PASS/FAIL line per criterion, exit code 1
// if any fails.

#include <functional>
#include <iostream>
#include <random>

#include "lck/lck.hpp"
#include "run_cli.hpp"

using namespace lck;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool entry_passed(const StructureReport& r, const std::string& name) {
  for (const auto& c : r.entries())
    if (c.name == name) return c.verdict == Verdict::Pass;
  return false;
}

void require_entries(Outcome& o, const StructureReport& r, std::initializer_list<const char*> names) {
  for (const char* n : names) o.require(entry_passed(r, n), std::string("entry failed or missing: ") + n);
}

KForm random_form(std::mt19937& rng, std::size_t n, std::size_t k, const std::vector<Scalar>& pool) {
  KForm f(n, k);
  std::uniform_int_distribution<int> coin(0, 2), num(-4, 4), den(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (const auto& idx : combinations(n, k))
    if (coin(rng) == 0) f.set(idx, Scalar(Rational(num(rng), den(rng))) * pool[pick(rng)]);
  return f;
}

Outcome foundations() {
  Outcome o;
  std::mt19937 rng(4242);
  std::size_t forms = 0;
  for (const char* id : {"u2", "gl2r", "su2", "sl2r"}) {
    const CatalogEntry e = get(id);
    const LieAlgebra& g = e.algebra;
    o.require(check_jacobi(g).verdict == Verdict::Pass, std::string("Jacobi on ") + id);
    std::vector<Scalar> pool{Scalar(1)};
    if (e.params)
      for (const auto& p : e.params->names()) pool.push_back(e.param(p));
    // 3/2 e^0 is closed on u2 and gl2r; su2 and sl2r are perfect, so only lambda = 0 is closed there
    const CohomologyDim closed = twisted_cohomology_dim(g, KForm(g.dim(), 1), 1);
    KForm lambda(g.dim(), 1);
    if (closed.kernel_dim > 0) lambda = Scalar(Rational(3, 2)) * KForm::dual(g.dim(), 0);
    o.require(ce_d(g, lambda).is_zero(), std::string("lambda closed on ") + id);
    std::uniform_int_distribution<std::size_t> deg(0, g.dim());
    for (int t = 0; t < 200; ++t) {
      const KForm a = random_form(rng, g.dim(), deg(rng), pool);
      o.require(ce_d(g, ce_d(g, a)).is_zero(), std::string("d d != 0 on ") + id);
      o.require(twisted_d(g, twisted_d(g, a, lambda), lambda).is_zero(), std::string("d_lambda d_lambda != 0 on ") + id);
      ++forms;
    }
  }
  if (o.ok) o.detail = "Jacobi on 4 algebras; d^2 = d_lambda^2 = 0 on " + std::to_string(forms) + " random forms";
  return o;
}

Outcome integrability() {
  Outcome o;
  const CatalogEntry u = get("u2"), gl = get("gl2r");
  o.require(nijenhuis(u.algebra, ComplexStructure(u.endo("J_ab"))).integrable.holds, "N(J_ab) != 0");
  o.require(nijenhuis(gl.algebra, ComplexStructure(gl.endo("J_mu_i"))).integrable.holds, "N(J_mu) != 0");
  const NijenhuisResult nt = nijenhuis(u.algebra, ComplexStructure(u.endo("J_t")));
  const Scalar t = u.param("t");
  o.require(nt.at(2, 3) == -t * t * unit_vector<Scalar>(4, 1), "N_t(e2,e3) != -t^2 e1");
  if (o.ok) o.detail = "J_ab, J_mu integrable; perturbed N(e2,e3) = -t^2 e1";
  return o;
}

Outcome u2_reproduction() {
  Outcome o;
  const StructureReport r = run_suite("u2_classification");
  require_entries(o, r,
                  {"omega(e0+e', e'') = (1 - mu)(a2 + i a3)", "defect forces a2 = a3 = 0 unless (a,b) = (0,1)",
                   "defect vanishes for a2 = a3 = 0", "defect vanishes for (a,b) = (0,1)",
                   "compatible iff a2 = a3 = 0 or (a,b) = (0,1) on the lattice", "generic J: lambda = -e^0",
                   "generic J: Z = e1/2", "generic J: xi = (a e1 - c e0)/2", "generic J: Vaisman",
                   "generic J: g definite iff b < 0", "J_{0,1}: signature (2,2)", "J_{0,1}: Vaisman iff a2 = a3 = 0",
                   "J_{0,1}: Lee vector ansatz"});
  if (o.ok) o.detail = "compatibility, case (i) data and definiteness, case (ii) signature and Vaisman locus";
  return o;
}

Outcome gl2_reproduction() {
  Outcome o;
  const StructureReport r = run_suite("gl2_classification");
  require_entries(o, r,
                  {"omega ^ omega = -2(ah^2 + 4 ap am) e^0 ^ h* ^ e^+ ^ e^-", "general omega is lcs with lambda = -e^0",
                   "mu = 1: metric", "mu = 1: Vaisman iff ah = 0 and ap = -am",
                   "mu = 1: Vaisman metric -ap((e^0)^2 + 4(h*)^2 + 2(e^+)^2 + 2(e^-)^2)",
                   "mu = 1: positive definite iff -ah^2 > 4 ap am and am > 0 > ap"});
  if (o.ok) o.detail = "omega^omega, metric coefficients, Vaisman locus, positive-definite region";
  return o;
}

Outcome cohomology() {
  Outcome o;
  for (const char* id : {"u2", "gl2r"}) {
    const CatalogEntry e = get(id);
    const KForm lambda = -KForm::dual(4, 0);
    o.require(twisted_cohomology_dim(e.algebra, lambda, 1).dim == 0, std::string("H^1 != 0 on ") + id);
    try {
      const Potential p = solve_potential(e.algebra, e.form("omega_general"), lambda);
      o.require(twisted_d(e.algebra, p.phi, lambda) == e.form("omega_general"), std::string("bad potential on ") + id);
    } catch (const Error& err) {
      o.require(false, std::string(id) + ": " + err.what());
    }
  }
  if (o.ok) o.detail = "H^1_lambda = 0 and [omega] = 0 on u2 and gl2r";
  return o;
}

Outcome reductive() {
  Outcome o;
  const StructureReport r = run_suite("reductive_identities");
  o.require(r.all_passed(), std::to_string(r.failed()) + " failed entries");
  if (o.ok) o.detail = std::to_string(r.entries().size()) + " identities on 3 Vaisman instances and 5 algebras";
  return o;
}

Outcome construction() {
  Outcome o;
  Mat flip = Mat::identity(4);
  flip(0, 0) = Scalar(-1);
  try {
    const OrbitLcs su = lcs_from_orbit(coadjoint_stabilizer(catalog::su2(), KForm::dual(3, 0)), Mat(3, 3));
    const CatalogEntry u = get("u2");
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        o.require(su.algebra.structure(i, j) == u.algebra.structure(i, j), "su2 extension is not u2");
    o.require(su.omega.pullback(flip) == u.form("omega"), "su2 orbit omega");
    o.require(su.lambda.pullback(flip) == u.form("lambda"), "su2 orbit lambda");
    o.require(su.report.all_passed(), "su2 orbit report");

    const KForm phi = KForm::dual(3, 1) - KForm::dual(3, 2);
    const OrbitLcs sl = lcs_from_orbit(coadjoint_stabilizer(catalog::sl2r(), phi), Mat(3, 3));
    const KForm target = get("gl2r").form("omega_thm_i");
    const KForm pulled = sl.omega.pullback(flip);
    const auto& [idx, c] = *target.coeffs().begin();
    o.require(!pulled.at(idx).is_zero() && pulled == (pulled.at(idx) / c) * target, "sl2 orbit omega not a multiple");
    o.require(sl.report.all_passed(), "sl2 orbit report");
  } catch (const Error& e) {
    o.require(false, e.what());
  }
  if (o.ok) o.detail = "su2 -> u2 family, sl2r -> rigid gl2r form, all lcs invariants hold";
  return o;
}

Outcome cli() {
  Outcome o;
  for (const char* id : {"u2", "gl2r", "su2", "sl2r", "abelian_4"}) {
    const std::string golden = read_file(data_path(std::string("catalog/") + id + ".json"));
    o.require(run_cli(std::string("catalog ") + id + " --emit").out == golden, std::string("emit differs: ") + id);
    o.require(emit_document(parse_document(golden)) == golden, std::string("round trip differs: ") + id);
  }
  for (const char* s : {"u2_classification", "gl2_classification", "reductive_identities"})
    o.require(run_cli(std::string("suite ") + s).out == read_file(data_path(std::string("golden/suite_") + s + ".txt")),
              std::string("suite output differs: ") + s);
  o.require(run_cli("check-algebra --doc " + data_path("catalog/u2.json")).exit_code == 0, "valid document");
  o.require(run_cli("check-algebra --doc " + data_path("corrupted_algebra.json")).exit_code == 1, "corrupted algebra");
  o.require(run_cli("check-algebra --doc " + data_path("malformed_algebra.json")).exit_code == 2, "malformed document");
  o.require(run_cli("frobnicate").exit_code == 2, "unknown command");
  if (o.ok) o.detail = "document round trip, suite goldens, exit codes 0/1/2";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"foundations", foundations},
      {"integrability", integrability},
      {"u2 classification", u2_reproduction},
      {"gl2 classification", gl2_reproduction},
      {"twisted cohomology", cohomology},
      {"reductive identities", reductive},
      {"orbit construction", construction},
      {"command line", cli},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << name << ": " << o.detail << std::endl;
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
