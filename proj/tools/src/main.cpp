#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace projcodes::cli;

namespace {

void add_common(CLI::App* sub, ConstructOptions& o) {
  sub->add_option("--q", o.q, "field size")->default_val(2);
  sub->add_option("--out", o.out, "output file");
  sub->add_option("--verify", o.verify, "auto|exhaustive|none")->default_val("auto");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subspace code construction, verification and decoding"};
  app.require_subcommand(1);
  std::function<int()> run;

  ConstructOptions co;
  auto* construct = app.add_subcommand("construct", "build a skeleton or a subspace code");
  construct->require_subcommand(1);

  auto* lex = construct->add_subcommand("lexicode", "greedy constant-weight skeleton");
  lex->add_option("--n", co.n)->required();
  lex->add_option("--k", co.k)->required();
  lex->add_option("--d", co.d, "minimum Hamming distance");
  lex->add_option("--delta", co.delta, "sets d = 2*delta when --d is absent");
  lex->add_option("--out", co.out);
  lex->callback([&] { run = [&] { return construct_lexicode(co); }; });

  auto* fix = construct->add_subcommand("skeleton-fixture", "weight class of a shipped Hamming code");
  fix->add_option("--skeleton", co.skeleton, "name[:wN|:all]")->required();
  fix->add_option("--out", co.out);
  fix->callback([&] { run = [&] { return construct_skeleton_fixture(co); }; });

  auto* ml = construct->add_subcommand("multilevel", "multilevel constant-dimension or mixed code");
  add_common(ml, co);
  ml->add_option("--n", co.n);
  ml->add_option("--k", co.k);
  ml->add_option("--delta", co.delta)->required();
  ml->add_option("--skeleton", co.skeleton, "lexicode | name[:wN|:all] | file")->default_val("lexicode");
  ml->callback([&] { run = [&] { return construct_multilevel_cmd(co); }; });

  auto* pu = construct->add_subcommand("puncture", "puncture a stored multilevel code");
  add_common(pu, co);
  pu->add_option("--code", co.code, "multilevel code file")->required();
  pu->add_option("--Q", co.hyperplane, "hyperplane subspace file; default [I | 0]");
  pu->add_option("--v", co.v, "vector outside Q, one symbol per coordinate");
  pu->add_option("--tau", co.tau, "auto, or the expected coordinate")->default_val("auto");
  pu->add_flag("--augment-trivial", co.augment_trivial, "add {0} and the whole space");
  pu->add_option("--search", co.search, "exhaustive|sampled context search");
  pu->add_option("--samples", co.samples)->default_val(2048);
  pu->add_option("--seed", co.seed)->default_val(1);
  pu->callback([&] { run = [&] { return construct_puncture(co); }; });

  auto* fam = construct->add_subcommand("family-4k", "punctured (4k-1, 2q^(2k^2), 2k-1) code");
  add_common(fam, co);
  fam->add_option("--k", co.k)->required();
  fam->add_flag("--extended", co.extended, "lexicode(4k, 2k, 2k) skeleton");
  fam->add_flag("--augment-trivial", co.augment_trivial);
  fam->callback([&] { run = [&] { return construct_family(co); }; });

  std::string path;
  bool exhaustive = false;
  std::uint64_t samples = 1'000'000, seed = 1;
  auto* verify = app.add_subcommand("verify", "pairwise minimum distance of a code file");
  verify->add_option("codefile", path)->required();
  verify->add_flag("--exhaustive", exhaustive, "never sample");
  verify->add_option("--samples", samples)->default_val(1'000'000);
  verify->add_option("--seed", seed)->default_val(1);
  verify->callback([&] { run = [&] { return verify_cmd(path, exhaustive, samples, seed); }; });

  std::string rows;
  std::size_t delta = 0;
  auto* bound = app.add_subcommand("dim-bound", "dimension bound for a Ferrers diagram");
  bound->add_option("--rows", rows, "row lengths, top first, e.g. 4,2,1,1")->required();
  bound->add_option("--delta", delta)->required();
  bound->callback([&] { run = [&] { return dim_bound_cmd(rows, delta); }; });

  std::string table_name, table_verify = "none";
  auto* table = app.add_subcommand("table", "recompute the built-in size comparison table");
  table->add_option("name", table_name)->required()->check(CLI::IsMember({"paper-iv-c", "comparison"}));
  table->add_option("--rows", rows, "comma-separated q_d_n_k keys");
  table->add_option("--verify", table_verify, "none|exhaustive")->default_val("none");
  table->callback([&] { run = [&] { return table_cmd(rows, table_verify); }; });

  std::string received;
  auto* decode = app.add_subcommand("decode", "decode a received subspace");
  decode->add_option("--code", path)->required();
  decode->add_option("--received", received, "subspace file")->required();
  decode->callback([&] { run = [&] { return decode_cmd(path, received); }; });

  std::size_t t = 0, rho = 0;
  std::uint64_t trials = 1000;
  auto* sim = app.add_subcommand("simulate", "operator channel simulation");
  sim->add_option("--code", path)->required();
  sim->add_option("--t", t, "inserted dimensions")->default_val(0);
  sim->add_option("--rho", rho, "erased dimensions")->default_val(0);
  sim->add_option("--trials", trials)->default_val(1000);
  sim->add_option("--seed", seed)->default_val(1);
  sim->callback([&] { run = [&] { return simulate_cmd(path, t, rho, trials, seed); }; });

  CLI11_PARSE(app, argc, argv);
  try {
    return run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
