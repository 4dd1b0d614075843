#include "weylchain/capi.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "weylchain/chevalley.hpp"
#include "weylchain/report.hpp"
#include "weylchain/sublattice.hpp"
#include "weylchain/weylmod.hpp"

using namespace weylchain;

struct wc_ctx {
  ScaleGuard guard;
  std::string cache_dir;
  std::string format = "json";
  bool timing = false;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(wc_ctx* ctx, const std::string& s, char** out) {
  if (out) *out = dup_string(s);
}

std::string render(wc_ctx* ctx, const Report& r) {
  return ctx->format == "text" ? to_text(r) : to_json(r);
}

template <class F>
wc_status run_report(wc_ctx* ctx, char** out, F f) {
  try {
    auto t0 = std::chrono::steady_clock::now();
    Report r = f();
    if (ctx->timing)
      r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    emit(ctx, render(ctx, r), out);
    return r.all_pass() ? WC_OK : WC_FAIL;
  } catch (const ScaleError& e) {
    ctx->last_error = e.what();
    return WC_SCALE;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return WC_USAGE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return WC_FAIL;
  }
}

}  // namespace

extern "C" {

wc_ctx* wc_ctx_new(void) { return new wc_ctx; }
void wc_ctx_free(wc_ctx* ctx) { delete ctx; }

void wc_ctx_set_cache_dir(wc_ctx* ctx, const char* dir) { ctx->cache_dir = dir ? dir : ""; }
void wc_ctx_set_format(wc_ctx* ctx, const char* format) {
  ctx->format = format ? format : "json";
}
void wc_ctx_set_max_nodes(wc_ctx* ctx, unsigned long max_nodes) {
  ctx->guard.max_nodes = max_nodes;
}
void wc_ctx_set_max_n(wc_ctx* ctx, int max_n) { ctx->guard.max_n = max_n; }
void wc_ctx_set_timing(wc_ctx* ctx, int enabled) { ctx->timing = enabled != 0; }

const char* wc_last_error(const wc_ctx* ctx) { return ctx->last_error.c_str(); }

wc_status wc_dims(wc_ctx* ctx, int n, char** out) {
  return run_report(ctx, out, [&] { return verify_dims(n, ctx->guard, ctx->cache_dir); });
}

wc_status wc_verify(wc_ctx* ctx, const char* suite_c, const char* family_c, int n, int k,
                    long p, char** out) {
  const std::string suite = suite_c ? suite_c : "";
  const std::string family = family_c ? family_c : "B";
  if (family != "B" && family != "C") {
    ctx->last_error = "family must be B or C";
    return WC_USAGE;
  }
  return run_report(ctx, out, [&]() -> Report {
    if (suite == "relations") return relation_check(n);
    if (suite == "sigma") return sigma_suite(n, k, ctx->guard);
    if (p != 2) throw std::invalid_argument("suite " + suite + " requires p = 2");
    if (suite == "theorem2") return verify_theorem2(n, k, ctx->guard);
    if (suite == "theorem4") return verify_theorem4(n, k, ctx->guard);
    if (suite == "chain") return verify_chain(n, k, ctx->guard);
    if (suite == "perfect") return verify_perfect(n, k, ctx->guard);
    if (suite == "lemmas") {
      Report r = lemma_suite(n, k, ctx->guard);
      Report s = splitting_decomposition(n, k, ctx->guard);
      for (auto& c : s.checks) r.checks.push_back(std::move(c));
      return r;
    }
    if (suite == "kernel") return kernel_as_module(n, k, ctx->guard);
    if (suite == "uniqueness") return verify_uniqueness(n, k, ctx->guard);
    throw std::invalid_argument("unknown suite: " + suite);
  });
}

wc_status wc_chain(wc_ctx* ctx, int n, int k, char** out) {
  return run_report(ctx, out, [&] { return verify_chain(n, k, ctx->guard); });
}

wc_status wc_snf(wc_ctx* ctx, const char* family_c, int n, int k, char** out) {
  const std::string family = family_c ? family_c : "B";
  try {
    Family f = family == "C" ? Family::C : Family::B;
    IntLattice L = generate_lattice(f, n, k, ctx->guard, ctx->cache_dir);
    IntLattice amb(L.ambient_dim());
    for (std::size_t i = 0; i < L.ambient_dim(); ++i) {
      std::vector<Int> e(L.ambient_dim(), 0);
      e[i] = 1;
      amb.insert(std::move(e));
    }
    std::ostringstream os;
    for (const auto& d : snf_divisors(L, amb)) os << d << "\n";
    emit(ctx, os.str(), out);
    return WC_OK;
  } catch (const ScaleError& e) {
    ctx->last_error = e.what();
    return WC_SCALE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return WC_USAGE;
  }
}

wc_status wc_lattice_dot(wc_ctx* ctx, int n, int k, char** out) {
  try {
    WeylModule wm = weyl_module(Family::B, n, k, 2, ctx->guard, ctx->cache_dir);
    emit(ctx, to_dot(full_lattice(wm.action, ctx->guard)), out);
    return WC_OK;
  } catch (const ScaleError& e) {
    ctx->last_error = e.what();
    return WC_SCALE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return WC_USAGE;
  }
}

wc_status wc_report_all(wc_ctx* ctx, int n, char** out) {
  try {
    std::vector<Report> reports;
    bool failed = false;
    auto push = [&](Report r) {
      failed = failed || !r.all_pass();
      reports.push_back(std::move(r));
    };
    auto guarded = [&](const std::string& suite, int k, auto f) {
      try {
        push(f());
      } catch (const ScaleError& e) {
        Report r;
        r.suite = suite;
        r.params = {Family::B, n, k, 2};
        r.add_skipped(suite + "-skipped", "suite skipped", e.what());
        reports.push_back(std::move(r));
      }
    };

    guarded("dims", 0, [&] { return verify_dims(n, ctx->guard, ctx->cache_dir); });
    guarded("relations", 0, [&] { return relation_check(n); });
    for (int k = 1; k <= n; ++k) {
      guarded("theorem2", k, [&] { return verify_theorem2(n, k, ctx->guard); });
      guarded("chain", k, [&] { return verify_chain(n, k, ctx->guard); });
      guarded("lemmas", k, [&] { return lemma_suite(n, k, ctx->guard); });
      guarded("splitting", k, [&] { return splitting_decomposition(n, k, ctx->guard); });
      guarded("sigma", k, [&] { return sigma_suite(n, k, ctx->guard); });
      if (k >= 2) {
        guarded("theorem4", k, [&] { return verify_theorem4(n, k, ctx->guard); });
        guarded("kernel", k, [&] { return kernel_as_module(n, k, ctx->guard); });
      }
      if (n <= 4) guarded("perfect", k, [&] { return verify_perfect(n, k, ctx->guard); });
      if (k <= 4 && n <= 4)
        guarded("uniqueness", k, [&] { return verify_uniqueness(n, k, ctx->guard); });
    }

    if (ctx->format == "text") {
      std::ostringstream os;
      for (const auto& r : reports) os << to_text(r);
      emit(ctx, os.str(), out);
    } else {
      emit(ctx, to_json(reports), out);
    }
    return failed ? WC_FAIL : WC_OK;
  } catch (const ScaleError& e) {
    ctx->last_error = e.what();
    return WC_SCALE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return WC_USAGE;
  }
}

void wc_free(char* s) { std::free(s); }

}  // extern "C"
