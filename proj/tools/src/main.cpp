#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "slu/error.hpp"

using namespace slu::cli;

namespace {

int exit_code(slu::ErrorKind k) {
  switch (k) {
    case slu::ErrorKind::AxiomViolation:
    case slu::ErrorKind::InvalidParallelism: return kFailed;
    case slu::ErrorKind::TooLarge:
    case slu::ErrorKind::Timeout: return kBudget;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slu: affine SL(2,q)-unitals, parallelisms and their closures"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;
  auto bind = [&](CLI::App* cmd, int (*fn)(const Options&)) {
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };
  auto add_q = [&](CLI::App* cmd) { cmd->add_option("--q", o.q, "Field order")->required(); };
  auto add_budget = [&](CLI::App* cmd) { cmd->add_option("--budget", o.budget, "Search node budget (0 = none)"); };

  auto* field = app.add_subcommand("field", "Finite field tables")->require_subcommand(1);
  auto* fi = bind(field->add_subcommand("info", "Modulus, squares and subfield"), field_info);
  fi->add_option("--p", o.p, "Characteristic")->required();
  fi->add_option("--e", o.e, "Degree");

  auto* group = app.add_subcommand("group", "SL(2,q) data")->require_subcommand(1);
  add_q(bind(group->add_subcommand("info", "Orders, Sylow subgroups, short blocks"), group_info));

  auto* unital = app.add_subcommand("unital", "Affine unitals")->require_subcommand(1);
  auto* us = bind(unital->add_subcommand("search", "All D-set families and their types"), unital_search);
  add_q(us);
  us->add_option("--s", o.subgroup, "'cyclic' or an index into the subgroups of order q+1");
  us->add_option("--out-dir", o.out_dir, "Write one .blocks file per type");
  add_budget(us);

  auto* para = app.add_subcommand("para", "Parallelisms")->require_subcommand(1);
  auto* pg = bind(para->add_subcommand("gen", "Construct a parallelism"), para_gen);
  add_q(pg);
  pg->add_option("--kind", o.kind, "flat|natural|odd|odd-prime|sq|sq-inv")
      ->required()
      ->check(CLI::IsMember({"flat", "natural", "odd", "odd-prime", "sq", "sq-inv"}));
  pg->add_option("-o,--out", o.out, "Output file (default stdout)");
  bind(para->add_subcommand("verify", "Check the parallelism axiom"), para_verify)
      ->add_option("file", o.files)->required()->expected(1);
  auto* pe = bind(para->add_subcommand("enum", "Enumerate all parallelisms"), para_enum);
  add_q(pe);
  add_budget(pe);
  pe->add_option("--out-dir", o.out_dir, "Write every parallelism as a .para file");
  bind(para->add_subcommand("stab", "Stabilizer in the full group"), para_stab)
      ->add_option("file", o.files)->required()->expected(1);
  auto* po = bind(para->add_subcommand("orbits", "Equivalence classes of parallelisms"), para_orbits);
  po->add_option("--group", o.group, "autH|autE|AR")->check(CLI::IsMember({"autH", "autE", "AR"}));
  po->add_flag("--json", o.json, "Report the classes as JSON");
  po->add_option("files", o.files)->required();

  auto* cl = bind(app.add_subcommand("close", "Closure of an affine unital by a parallelism"), close_cmd);
  cl->add_option("files", o.files, "UNITAL.blocks PARA.para")->required()->expected(2);
  cl->add_option("-o,--out", o.out, "Output file (default stdout)");

  auto* design = app.add_subcommand("design", "Designs")->require_subcommand(1);
  auto* dv = bind(design->add_subcommand("verify", "Check the 2-(n^3+1, n+1, 1) axioms"), design_verify);
  dv->add_option("file", o.files)->required()->expected(1);
  dv->add_option("--n", o.n, "Unital order")->required();

  auto* iso = app.add_subcommand("iso", "Automorphisms and isomorphisms")->require_subcommand(1);
  auto* ia = bind(iso->add_subcommand("aut", "Automorphism group"), iso_aut);
  ia->add_option("file", o.files)->required()->expected(1);
  ia->add_option("-o,--out", o.out, "Write the canonical form");
  bind(iso->add_subcommand("cmp", "Isomorphism test"), iso_cmp)
      ->add_option("files", o.files)->required()->expected(2);
  auto* ib = bind(iso->add_subcommand("blockfix", "Is a block fixed by every automorphism"), iso_blockfix);
  ib->add_option("file", o.files)->required()->expected(1);
  ib->add_option("--block", o.block, "'last' or a block index");

  auto* trans = app.add_subcommand("trans", "Translations")->require_subcommand(1);
  bind(trans->add_subcommand("report", "Translations with centers at infinity"), trans_report)
      ->add_option("files", o.files, "UNITAL.blocks PARA.para")->required()->expected(2);
  bind(trans->add_subcommand("all", "Translation groups of every point"), trans_all)
      ->add_option("file", o.files)->required()->expected(1);

  auto* repro = app.add_subcommand("repro", "Reproduce the order-4 results")->require_subcommand(1);
  auto* rc = bind(repro->add_subcommand("counts", "Number of parallelisms"), repro_counts);
  add_q(rc);
  add_budget(rc);
  add_budget(bind(repro->add_subcommand("table1", "Orbit lengths on the parallelisms"), repro_table1));
  add_budget(bind(repro->add_subcommand("table2", "Automorphism groups of the sporadic closures"), repro_table2));
  add_budget(bind(repro->add_subcommand("leonids", "Isomorphism types, rigidity, translations"), repro_leonids));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    return action(o);
  } catch (const slu::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
