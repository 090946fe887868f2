// mgt: exact computations with finite metric groups, their orthogonal
// groups, abelian group cohomology, pointed Drinfeld-center data and
// Clifford/Pin/Spin groups over small odd finite fields.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mgt/cli_runner.hpp"

namespace {

int exit_code_for(mgt::ErrorKind kind) {
  switch (kind) {
    case mgt::ErrorKind::ParseError:
      return 2;
    case mgt::ErrorKind::CapExceeded:
      return 3;
    default:
      return 1;
  }
}

struct GlobalOpts {
  bool tsv = false;
  bool timings = false;
  long long cap = 0;
  long long seed = 0;
  int workers = 0;
};

int run_and_print(const GlobalOpts& g, const std::string& command, const mgt::Json& params) {
  mgt::JobSpec spec{command, params, g.cap, g.seed, g.workers};
  try {
    auto env = mgt::run(spec);
    std::cout << env.to_json(g.timings).dump(2) << "\n";
    return env.ok() ? 0 : 1;
  } catch (const mgt::Error& e) {
    mgt::Json out{{"tool", "mgt"},
                  {"version", mgt::kToolVersion},
                  {"command", command},
                  {"input", params},
                  {"error", e.what()}};
    std::cout << out.dump(2) << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact finite metric-group and Clifford-group computations"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--tsv", g.tsv, "emit TSV for table output");
  app.add_flag("--timings", g.timings, "include wall time in envelopes");
  app.add_option("--cap", g.cap, "override the default enumeration cap");
  app.add_option("--seed", g.seed, "seed recorded in output metadata");
  app.add_option("--workers", g.workers, "worker threads for scans and batches");

  std::string group_spec, form_spec, coeff = "scalars", tau = "trivial", sub_spec, cl_form = "split";
  std::string batch_file;
  long long degree = 3, nn = 1, pp = 3, dim = 2;
  bool nd_only = false, with_tables = false;

  auto* cgroup = app.add_subcommand("group", "finite abelian groups");
  auto* ginfo = cgroup->add_subcommand("info", "order, exponent, dual");
  ginfo->add_option("--group", group_spec, "cyclic orders, e.g. 2,4")->required();
  auto* gaut = cgroup->add_subcommand("aut", "automorphism count by enumeration");
  gaut->add_option("--group", group_spec)->required();

  auto* cquad = app.add_subcommand("quad", "quadratic forms");
  auto* qenum = cquad->add_subcommand("enumerate", "all forms on a group");
  qenum->add_option("--group", group_spec)->required();
  qenum->add_flag("--nondegenerate-only", nd_only, "keep only nondegenerate forms");
  qenum->add_flag("--tables", with_tables, "include full value tables");
  auto* qcheck = cquad->add_subcommand("check", "validate a form and test nondegeneracy");
  qcheck->add_option("--form", form_spec, "ev:<spec>|split:<n>,<p>|trivial:<spec>|file:<path>")
      ->required();

  auto* corth = app.add_subcommand("orth", "orthogonal groups of metric groups");
  auto* oorder = corth->add_subcommand("order", "|O|, |SO| and the determinant spectrum");
  oorder->add_option("--form", form_spec)->required();
  oorder->add_option("--group", group_spec, "optional; must match the form's group");
  auto* osplit = corth->add_subcommand("split-check", "brute force vs the classical order");
  osplit->add_option("--n", nn)->required();
  osplit->add_option("--p", pp)->required();

  auto* clag = app.add_subcommand("lagrangian", "isotropic and Lagrangian subgroups");
  auto* llist = clag->add_subcommand("list", "Lagrangian subgroups of a metric group");
  llist->add_option("--form", form_spec)->required();
  llist->add_option("--group", group_spec, "optional; must match the form's group");
  auto* lpol = clag->add_subcommand("polarize", "Lagrangians realized through L + L^");
  lpol->add_option("--form", form_spec)->required();

  auto* ccoh = app.add_subcommand("cohomology", "bar-resolution group cohomology");
  ccoh->add_option("--group", group_spec);
  ccoh->add_option("--degree", degree);
  ccoh->add_option("--coeff", coeff, "scalars | muN:<N>");
  auto* cem = ccoh->add_subcommand("em", "abelian 3-cocycle classes vs quadratic forms");
  cem->add_option("--group", group_spec)->required();
  auto* ctor = ccoh->add_subcommand("torsor", "ambient obstruction groups for a metric group");
  ctor->add_option("--form", form_spec)->required();
  ctor->add_option("--sub", sub_spec, "abelian subgroup shape, e.g. 2")->required();

  auto* ccen = app.add_subcommand("center", "pointed Drinfeld-center data");
  auto* ccls = ccen->add_subcommand("classify", "metric group and braiding pair of the center");
  ccls->add_option("--group", group_spec)->required();
  ccls->add_option("--tau", tau, "trivial | file:<path> | <path>");
  auto* cpt = ccen->add_subcommand("pointed", "pointedness of the center");
  cpt->add_option("--group", group_spec)->required();
  cpt->add_option("--tau", tau);

  auto* ccl = app.add_subcommand("clifford", "Clifford algebras over odd finite fields");
  auto* cpin = ccl->add_subcommand("pin", "Lipschitz group, Pin, Spin and the norm diagram");
  cpin->add_option("--p", pp)->required();
  cpin->add_option("--dim", dim)->required();
  cpin->add_option("--form", cl_form, "split | diag:<c1,c2,...>");
  auto* cspin = ccl->add_subcommand("spinor-module", "exterior-algebra module and Cl = End");
  cspin->add_option("--p", pp)->required();
  cspin->add_option("--n", nn, "half dimension")->required();

  auto* cbatch = app.add_subcommand("batch", "run a homogeneous list of jobs");
  cbatch->add_option("--file", batch_file, "JSON: {command, jobs: [...]}")->required();

  // global flags may appear after any verb
  for (CLI::App* sc : {cgroup, cquad, corth, clag, ccoh, ccen, ccl, cbatch,
                       static_cast<CLI::App*>(ginfo), static_cast<CLI::App*>(gaut),
                       static_cast<CLI::App*>(qenum), static_cast<CLI::App*>(qcheck),
                       static_cast<CLI::App*>(oorder), static_cast<CLI::App*>(osplit),
                       static_cast<CLI::App*>(llist), static_cast<CLI::App*>(lpol),
                       static_cast<CLI::App*>(cem), static_cast<CLI::App*>(ctor),
                       static_cast<CLI::App*>(ccls), static_cast<CLI::App*>(cpt),
                       static_cast<CLI::App*>(cpin), static_cast<CLI::App*>(cspin)})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto check_group_matches_form = [&](const mgt::Json& params) -> int {
    // optional --group alongside --form must agree
    if (!group_spec.empty() && params.contains("form")) {
      try {
        auto q = mgt::parse_form_spec(form_spec);
        auto ggg = mgt::FiniteAbelianGroup::parse(group_spec);
        if (!(q.group() == ggg)) {
          std::cerr << "--group does not match the form's group\n";
          return 2;
        }
      } catch (const mgt::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e.kind());
      }
    }
    return 0;
  };

  if (ginfo->parsed()) return run_and_print(g, "group.info", {{"group", group_spec}});
  if (gaut->parsed()) return run_and_print(g, "group.aut", {{"group", group_spec}});
  if (qenum->parsed())
    return run_and_print(g, "quad.enumerate",
                         {{"group", group_spec}, {"nondegenerate", nd_only}, {"tables", with_tables}});
  if (qcheck->parsed()) return run_and_print(g, "quad.check", {{"form", form_spec}});
  if (oorder->parsed()) {
    mgt::Json params{{"form", form_spec}};
    if (int rc = check_group_matches_form(params)) return rc;
    return run_and_print(g, "orth.order", params);
  }
  if (osplit->parsed()) return run_and_print(g, "orth.split-check", {{"n", nn}, {"p", pp}});
  if (llist->parsed()) {
    mgt::Json params{{"form", form_spec}};
    if (int rc = check_group_matches_form(params)) return rc;
    return run_and_print(g, "lagrangian.list", params);
  }
  if (lpol->parsed()) return run_and_print(g, "lagrangian.polarize", {{"form", form_spec}});
  if (cem->parsed()) return run_and_print(g, "cohomology.em", {{"group", group_spec}});
  if (ctor->parsed())
    return run_and_print(g, "cohomology.torsor", {{"form", form_spec}, {"sub", sub_spec}});
  if (ccoh->parsed()) {
    if (group_spec.empty()) {
      std::cerr << "cohomology needs --group\n";
      return 2;
    }
    return run_and_print(g, "cohomology.compute",
                         {{"group", group_spec}, {"degree", degree}, {"coeff", coeff}});
  }
  if (ccls->parsed())
    return run_and_print(g, "center.classify", {{"group", group_spec}, {"tau", tau}});
  if (cpt->parsed())
    return run_and_print(g, "center.pointed", {{"group", group_spec}, {"tau", tau}});
  if (cpin->parsed())
    return run_and_print(g, "clifford.pin", {{"p", pp}, {"dim", dim}, {"form", cl_form}});
  if (cspin->parsed())
    return run_and_print(g, "clifford.spinor-module", {{"p", pp}, {"n", nn}});
  if (cbatch->parsed()) {
    std::ifstream in(batch_file);
    if (!in) {
      std::cerr << "cannot open batch file '" << batch_file << "'\n";
      return 2;
    }
    mgt::Json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      std::cerr << "bad batch file: " << e.what() << "\n";
      return 2;
    }
    if (!j.contains("command") || !j.contains("jobs") || !j["jobs"].is_array()) {
      std::cerr << "batch file needs {command, jobs: [...]}\n";
      return 2;
    }
    std::vector<mgt::Json> jobs(j["jobs"].begin(), j["jobs"].end());
    auto table =
        mgt::emit_table(j["command"].get<std::string>(), jobs, g.workers, g.cap, g.seed);
    if (g.tsv)
      std::cout << mgt::batch_to_tsv(table);
    else
      std::cout << mgt::batch_to_json(table).dump(2) << "\n";
    return 0;
  }
  std::cerr << "no verb given; see --help\n";
  return 2;
}
