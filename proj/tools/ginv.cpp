#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ginv/cli.hpp"
#include "ginv/version.hpp"

int main(int argc, char** argv) {
  using namespace ginv::cli;
  CLI::App app{"Exact generalized inverses and m-weak group identity checks"};
  app.set_version_flag("--version", ginv::kVersion);
  app.require_subcommand(1);

  ComputeOptions compute;
  std::size_t compute_m = 0;
  auto* c = app.add_subcommand("compute", "compute one inverse and verify it");
  c->add_option("kind", compute.kind, "mp, group, drazin, coreep, wg, mwg or gg")
      ->required()
      ->check(CLI::IsMember(compute_kinds()));
  auto* c_m = c->add_option("--m", compute_m, "power m (mwg only)");
  c->add_option("--input", compute.input)->required();
  c->add_option("--output", compute.output)->required();

  VerifyOptions verify;
  std::string verify_x, verify_y, verify_b;
  std::size_t verify_n = 0;
  auto* v = app.add_subcommand("verify", "run one named check");
  v->add_option("check", verify.check)->required();
  v->add_option("--input", verify.input)->required();
  auto* v_x = v->add_option("--x", verify_x, "candidate inverse or decomposition part x");
  auto* v_y = v->add_option("--y", verify_y, "decomposition part y");
  auto* v_b = v->add_option("--b", verify_b, "second matrix for the law checks");
  auto* v_n = v->add_option("--n", verify_n, "second power for blocks-commutation");
  v->add_option("--m", verify.m);

  DecomposeOptions decompose;
  auto* d = app.add_subcommand("decompose", "split A = x + y");
  d->add_option("--input", decompose.input)->required();
  d->add_option("--m", decompose.m)->required();
  d->add_option("--output-x", decompose.output_x)->required();
  d->add_option("--output-y", decompose.output_y)->required();

  BlocksOptions blocks;
  auto* b = app.add_subcommand("blocks", "write the block data of A relative to A A^⊕");
  b->add_option("--input", blocks.input)->required();
  b->add_option("--m", blocks.m)->required();
  b->add_option("--output", blocks.output)->required();

  HarnessOptions harness;
  auto* h = app.add_subcommand("harness", "run every check over generated matrices");
  h->add_option("--trials", harness.trials)->required();
  h->add_option("--dim-max", harness.dim_max)->required();
  h->add_option("--index-max", harness.index_max)->required();
  h->add_option("--m", harness.ms, "comma separated list")->required()->delimiter(',');
  h->add_option("--seed", harness.seed)->required();
  h->add_option("--entry-bound", harness.entry_bound);
  h->add_option("--report", harness.report)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  if (c->parsed()) {
    if (c_m->count() > 0) compute.m = compute_m;
    return cmd_compute(compute, std::cout, std::cerr);
  }
  if (v->parsed()) {
    if (v_x->count() > 0) verify.x = verify_x;
    if (v_y->count() > 0) verify.y = verify_y;
    if (v_b->count() > 0) verify.b = verify_b;
    if (v_n->count() > 0) verify.n = verify_n;
    return cmd_verify(verify, std::cout, std::cerr);
  }
  if (d->parsed()) return cmd_decompose(decompose, std::cout, std::cerr);
  if (b->parsed()) return cmd_blocks(blocks, std::cout, std::cerr);
  return cmd_harness(harness, std::cout, std::cerr);
}
