// lckcheck: command-line front end for the lck library.
//
// Exit codes: 0 every check passed, 1 some check failed, 2 the input could
// not be used (parse errors, unknown names, vanishing denominators).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lck/lck.hpp"

using namespace lck;

namespace {

constexpr int kFailed = 1;
constexpr int kInputError = 2;

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::DenominatorVanishes:
    case ErrorKind::UnknownId:
    case ErrorKind::UnknownCommand:
    case ErrorKind::InvalidArgument:
    case ErrorKind::AmbientMismatch:
      return true;
    default:
      return false;
  }
}

struct Source {
  std::string doc_path;
  std::string catalog_id;
  std::string at;

  void attach(CLI::App* cmd, bool with_at = true) {
    cmd->add_option("--doc", doc_path, "document file (JSON)");
    cmd->add_option("--catalog", catalog_id, "catalog entry instead of a document, e.g. u2");
    if (with_at) cmd->add_option("--at", at, "specialize parameters first, e.g. a=0,b=-1");
  }

  Document load() const {
    if (doc_path.empty() == catalog_id.empty())
      throw Error(ErrorKind::InvalidArgument, "give exactly one of --doc and --catalog");
    Document d = doc_path.empty() ? document_from(get(catalog_id)) : load_document(doc_path);
    if (!at.empty()) d = specialize(d, parse_assignment(at, d.params));
    return d;
  }

  static Document specialize(const Document& d, const Assignment& a) {
    Document out = d;
    const LieAlgebra& g = d.algebra;
    LieAlgebra s(g.names());
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) s.set_structure(i, j, substitute(g.structure(i, j), a));
    std::vector<Vec> h;
    for (const auto& v : g.h_basis()) h.push_back(substitute(v, a));
    s.set_h(std::move(h));
    out.algebra = std::move(s);
    for (auto& [k, f] : out.forms) f = f.substitute(a);
    for (auto& [k, m] : out.endos) m = substitute(m, a);
    for (auto& [k, m] : out.bilinears) m = substitute(m, a);
    out.excluded.clear();
    for (const auto& p : d.excluded)
      if (p.substitute(a).is_zero()) throw Error(ErrorKind::DenominatorVanishes, "excluded " + p.str() + " at " + assignment_str(a));
    return out;
  }
};

KForm resolve_form(const Document& d, const std::string& text, const std::string& role) {
  auto it = d.forms.find(text);
  if (it != d.forms.end()) return it->second;
  return parse_form(text, d.params, d.algebra.names(), role);
}

const Mat& resolve_endo(const Document& d, const std::string& name) {
  auto it = d.endos.find(name);
  if (it == d.endos.end()) throw Error(ErrorKind::UnknownId, "endomorphism " + name);
  return it->second;
}

// Runs one stage of a check; a domain error becomes a failed entry and
// stops the remaining stages, an input error propagates.
template <class F>
bool stage(StructureReport& r, const std::string& name, F&& body) {
  try {
    body();
    return true;
  } catch (const Error& e) {
    if (is_input_error(e.kind())) throw;
    r.add(name, false, e.what());
    return false;
  }
}

bool all_constant(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_constant()) return false;
  return true;
}

struct LckOptions {
  std::string omega, J, convention = "thm", bilinear;
  bool pseudo = false;
};

void check_lck(StructureReport& r, const Document& d, const LckOptions& o, bool vaisman) {
  const LieAlgebra& g = d.algebra;
  const KForm omega = resolve_form(d, o.omega, "omega");
  const Mat& Jm = resolve_endo(d, o.J);
  std::optional<ComplexStructure> J;
  if (!stage(r, "almost complex", [&] { J.emplace(Jm); })) return;
  r.add("almost complex", true, "J^2 = -1");
  const NijenhuisResult N = nijenhuis(g, *J);
  detail::add_identity(r, "integrable", N.integrable);
  LckData lk;
  const Convention conv = o.convention == "def" ? Convention::Definition : Convention::Theorem;
  if (!stage(r, "lck data", [&] { lk = assemble_lck(g, omega, *J, conv); })) return;
  r.append(lk.report);
  r.exclude(lk.excluded);
  if (all_constant(lk.metric.matrix)) {
    stage(r, "metric definite", [&] {
      const Signature s = signature_at(lk.metric, {});
      if (s.definite(g.dim())) r.add("metric definite", true, "signature " + s.str());
      else r.add("metric definite", o.pseudo, "signature " + s.str() + (o.pseudo ? ", pseudo-lcK" : ""));
    });
  } else {
    r.skip("metric definite", "open condition in the parameters; pass --at to decide");
  }
  if (!vaisman) return;
  VaismanResult v;
  if (!stage(r, "vaisman", [&] { v = vaisman_check(g, lk); })) return;
  r.append(v.report);
  r.add("vaisman", v.parallel.holds, v.parallel.holds ? "" : "nabla xi = 0 exactly on " + v.parallel.locus.str());
  if (!o.bilinear.empty()) {
    auto it = d.bilinears.find(o.bilinear);
    if (it == d.bilinears.end()) throw Error(ErrorKind::UnknownId, "bilinear " + o.bilinear);
    stage(r, "bi-invariant identities", [&] { r.append(biinvariant_identities(g, it->second, lk).report, "B"); });
  }
}

void print(const StructureReport& r, const std::string& format) {
  if (format == "json") std::cout << r.json().dump(2) << "\n";
  else std::cout << r.text();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of lcs, lcK and Vaisman structures on Lie algebras"};
  std::string format = "text";
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.require_subcommand(1);

  Source src;
  LckOptions lo;

  auto* c_alg = app.add_subcommand("check-algebra", "Jacobi identity, isotropy subalgebra, center");
  src.attach(c_alg);

  std::string omega_arg;
  auto* c_lcs = app.add_subcommand("check-lcs", "nondegeneracy and Lee form of a 2-form");
  src.attach(c_lcs);
  c_lcs->add_option("omega", omega_arg, "form name or wedge expression")->required();

  auto* c_lck = app.add_subcommand("check-lck", "lcs form with a compatible integrable J");
  auto* c_vai = app.add_subcommand("check-vaisman", "lcK data with a parallel Lee vector");
  for (auto* c : {c_lck, c_vai}) {
    src.attach(c);
    c->add_option("omega", lo.omega, "form name or wedge expression")->required();
    c->add_option("J", lo.J, "endomorphism name")->required();
    c->add_option("--convention", lo.convention, "def: omega(.,J.), thm: -omega(J.,.)")
        ->check(CLI::IsMember({"def", "thm"}));
    c->add_flag("--pseudo", lo.pseudo, "accept an indefinite metric");
  }
  c_vai->add_option("--bilinear", lo.bilinear, "ad-invariant form for the reductive identities");

  std::string lambda_arg, potential_arg;
  std::size_t degree = 1;
  auto* c_coh = app.add_subcommand("cohomology", "twisted cohomology of the relative complex");
  src.attach(c_coh);
  c_coh->add_option("--lambda", lambda_arg, "closed 1-form")->required();
  c_coh->add_option("--degree", degree, "degree k")->required();
  c_coh->add_option("--omega", potential_arg, "also solve d_lambda phi = omega");

  std::string phi_arg, derivation_arg, new_name, emit_path;
  auto* c_orb = app.add_subcommand("construct-orbit", "lcs structure on g(D) from a coadjoint orbit");
  src.attach(c_orb);
  c_orb->add_option("--phi", phi_arg, "1-form on the document algebra")->required();
  c_orb->add_option("--derivation", derivation_arg, "endomorphism name; default 0");
  c_orb->add_option("--name", new_name, "name of the new basis vector");
  c_orb->add_option("--emit", emit_path, "write the constructed document here");

  std::string suite_name;
  auto* c_suite = app.add_subcommand("suite", "run a classification suite");
  c_suite->add_option("name", suite_name)->required();

  std::string catalog_id;
  bool emit = false;
  auto* c_cat = app.add_subcommand("catalog", "list or print catalog entries");
  c_cat->add_option("id", catalog_id);
  c_cat->add_flag("--emit", emit, "print the entry as a document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ExtrasError& e) {
    std::cerr << Error(ErrorKind::UnknownCommand, e.what()).what() << "\n";
    return kInputError;
  } catch (const CLI::ParseError& e) {
    if (app.get_subcommands().empty() && argc > 1 && argv[1][0] != '-')
      std::cerr << Error(ErrorKind::UnknownCommand, argv[1]).what() << "\n";
    else
      std::cerr << "usage error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    StructureReport r;
    if (c_alg->parsed()) {
      const Document d = src.load();
      r.set_title("check-algebra");
      const CheckEntry j = check_jacobi(d.algebra);
      r.add(j.name, j.verdict == Verdict::Pass, j.detail, j.locus);
      if (j.verdict == Verdict::Pass) {
        r.add("center", true, "dim " + std::to_string(center(d.algebra).dim()));
        r.add("derived algebra", true, "dim " + std::to_string(derived_algebra(d.algebra).dim()));
      }
    } else if (c_lcs->parsed()) {
      const Document d = src.load();
      r.set_title("check-lcs");
      const KForm omega = resolve_form(d, omega_arg, "omega");
      stage(r, "lcs", [&] {
        const LcsData l = lcs_check(d.algebra, omega);
        r.append(l.report);
        r.exclude(l.excluded);
      });
    } else if (c_lck->parsed() || c_vai->parsed()) {
      const Document d = src.load();
      r.set_title(c_lck->parsed() ? "check-lck" : "check-vaisman");
      check_lck(r, d, lo, c_vai->parsed());
    } else if (c_coh->parsed()) {
      const Document d = src.load();
      const LieAlgebra& g = d.algebra;
      r.set_title("cohomology");
      const KForm lambda = resolve_form(d, lambda_arg, "lambda");
      if (!ce_d(g, lambda).is_zero()) {
        std::cerr << "warning: lambda is not closed, d_lambda does not square to zero\n";
        r.add("lambda closed", false, "d lambda = " + ce_d(g, lambda).str(g.names()));
      } else {
        r.add("lambda closed", true);
        stage(r, "H^k_lambda", [&] {
          const CohomologyDim h = twisted_cohomology_dim(g, lambda, degree);
          r.add("H^" + std::to_string(degree) + "_lambda", true,
                "dim " + std::to_string(h.dim) + " (kernel " + std::to_string(h.kernel_dim) + ", image " +
                    std::to_string(h.image_dim) + ", cochains " + std::to_string(h.cochain_dim) + ")",
                h.locus);
        });
        if (!potential_arg.empty()) {
          const KForm omega = resolve_form(d, potential_arg, "omega");
          stage(r, "[omega] = 0", [&] {
            const Potential p = solve_potential(g, omega, lambda);
            r.add("[omega] = 0", true, "omega = d_lambda(" + p.phi.str(g.names()) + ")", p.locus);
          });
        }
      }
    } else if (c_orb->parsed()) {
      const Document d = src.load();
      const LieAlgebra& g = d.algebra;
      r.set_title("construct-orbit");
      const KForm phi = resolve_form(d, phi_arg, "phi");
      const Mat D = derivation_arg.empty() ? Mat(g.dim(), g.dim()) : resolve_endo(d, derivation_arg);
      stage(r, "orbit", [&] {
        const OrbitData o = coadjoint_stabilizer(g, phi);
        r.add("stabilizer", true, "dim k = " + std::to_string(o.k.dim()) + ", dim h = " + std::to_string(o.h.dim()));
        const OrbitLcs out = lcs_from_orbit(o, D, new_name);
        r.append(out.report);
        r.add("omega", true, out.omega.str(out.algebra.names()));
        if (!emit_path.empty()) {
          Document e{d.id.empty() ? "" : d.id + "_extended", d.params, out.algebra, {}, {}, {}, {}};
          e.forms["omega"] = out.omega;
          e.forms["lambda"] = out.lambda;
          e.forms["phi"] = out.phi;
          std::ofstream f(emit_path);
          if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + emit_path);
          f << emit_document(e);
        }
      });
    } else if (c_suite->parsed()) {
      r = run_suite(suite_name);
    } else if (c_cat->parsed()) {
      if (catalog_id.empty()) {
        for (const auto& id : catalog_ids()) std::cout << id << "\n";
        return 0;
      }
      const CatalogEntry e = get(catalog_id);
      if (emit) {
        std::cout << emit_document(document_from(e));
        return 0;
      }
      r.set_title("catalog " + e.id);
      r.add("basis", true, std::to_string(e.algebra.dim()) + " vectors");
      for (const auto& [k, f] : e.forms) r.add("form " + k, true, f.str(e.algebra.names()));
      for (const auto& [k, m] : e.endos) r.add("endo " + k, true, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
      r.exclude(e.excluded);
    }
    print(r, format);
    return r.all_passed() ? 0 : kFailed;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return is_input_error(e.kind()) ? kInputError : kFailed;
  }
}
