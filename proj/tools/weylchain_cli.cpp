// Command-line driver for the verification engine; everything goes through
// the C API so this doubles as a smoke test for the shared library.

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>

#include "weylchain/capi.h"

namespace {

struct CtxDeleter {
  void operator()(wc_ctx* c) const { wc_ctx_free(c); }
};

int finish(wc_ctx* ctx, wc_status st, char* out) {
  if (out) {
    std::fputs(out, stdout);
    wc_free(out);
  }
  if (st == WC_USAGE || st == WC_SCALE) std::fprintf(stderr, "%s\n", wc_last_error(ctx));
  return int(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weylchain: exact verification of orthogonal Grassmann module structure"};
  app.require_subcommand(1);

  int n = 0, k = 0;
  long p = 2;
  std::string family = "B", format = "text", cache_dir, suite;
  unsigned long max_nodes = 64;
  int max_n = 5;
  bool timing = false;

  auto add_common = [&](CLI::App* cmd, bool needs_k) {
    cmd->add_option("--n", n, "rank")->required();
    if (needs_k) cmd->add_option("--k", k, "exterior power degree");
    cmd->add_option("--p", p, "field characteristic (default 2)");
    cmd->add_option("--family", family, "root system family, B or C (default B)")
        ->check(CLI::IsMember({"B", "C"}));
    cmd->add_option("--format", format, "output format (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--cache-dir", cache_dir, "lattice cache directory");
    cmd->add_option("--max-nodes", max_nodes, "submodule lattice node cap (default 64)");
    cmd->add_option("--max-n", max_n, "rank cap (default 5)");
    cmd->add_flag("--timing", timing, "record wall time in reports");
  };

  CLI::App* dims = app.add_subcommand("dims", "dimension tables for all k <= n");
  add_common(dims, false);
  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify
      ->add_option("suite", suite,
                   "theorem2|theorem4|chain|perfect|sigma|lemmas|kernel|uniqueness|relations")
      ->required();
  add_common(verify, true);
  CLI::App* chain = app.add_subcommand("chain", "submodule chain report");
  add_common(chain, true);
  CLI::App* lattice = app.add_subcommand("lattice", "submodule lattice as DOT");
  add_common(lattice, true);
  CLI::App* snf = app.add_subcommand("snf", "elementary divisors of the lattice inclusion");
  add_common(snf, true);
  CLI::App* report_all = app.add_subcommand("report-all", "every suite within scale bounds");
  add_common(report_all, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return int(WC_USAGE);
  }

  std::unique_ptr<wc_ctx, CtxDeleter> ctx(wc_ctx_new());
  wc_ctx_set_cache_dir(ctx.get(), cache_dir.c_str());
  wc_ctx_set_format(ctx.get(), format.c_str());
  wc_ctx_set_max_nodes(ctx.get(), max_nodes);
  wc_ctx_set_max_n(ctx.get(), max_n);
  wc_ctx_set_timing(ctx.get(), timing ? 1 : 0);

  char* out = nullptr;
  wc_status st = WC_USAGE;
  if (dims->parsed()) {
    st = wc_dims(ctx.get(), n, &out);
  } else if (verify->parsed()) {
    if (k == 0 && suite != "relations" && suite != "dims") {
      std::fprintf(stderr, "verify %s requires --k\n", suite.c_str());
      return int(WC_USAGE);
    }
    st = wc_verify(ctx.get(), suite.c_str(), family.c_str(), n, k, p, &out);
  } else if (chain->parsed()) {
    if (k == 0) {
      std::fprintf(stderr, "chain requires --k\n");
      return int(WC_USAGE);
    }
    st = wc_chain(ctx.get(), n, k, &out);
  } else if (lattice->parsed()) {
    if (k == 0) {
      std::fprintf(stderr, "lattice requires --k\n");
      return int(WC_USAGE);
    }
    st = wc_lattice_dot(ctx.get(), n, k, &out);
  } else if (snf->parsed()) {
    if (k == 0) {
      std::fprintf(stderr, "snf requires --k\n");
      return int(WC_USAGE);
    }
    st = wc_snf(ctx.get(), family.c_str(), n, k, &out);
  } else if (report_all->parsed()) {
    st = wc_report_all(ctx.get(), n, &out);
  }
  return finish(ctx.get(), st, out);
}
