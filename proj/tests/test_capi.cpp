#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "weylchain/capi.h"

namespace {

struct Ctx {
  wc_ctx* c;
  Ctx() : c(wc_ctx_new()) {}
  ~Ctx() { wc_ctx_free(c); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  wc_free(s);
  return out;
}

}  // namespace

TEST_CASE("dims returns a json report and WC_OK") {
  Ctx ctx;
  char* out = nullptr;
  CHECK(wc_dims(ctx.c, 2, &out) == WC_OK);
  std::string s = take(out);
  CHECK(s.find("\"suite\"") != std::string::npos);
  CHECK(s.find("\"checks\"") != std::string::npos);
}

TEST_CASE("verify dispatches every suite") {
  Ctx ctx;
  for (const char* suite : {"relations", "sigma", "theorem2", "theorem4", "chain",
                            "perfect", "lemmas", "kernel", "uniqueness"}) {
    char* out = nullptr;
    CHECK(wc_verify(ctx.c, suite, "B", 2, 2, 2, &out) == WC_OK);
    std::string s = take(out);
    CHECK(s.find("\"status\": \"pass\"") != std::string::npos);
  }
}

TEST_CASE("usage errors") {
  Ctx ctx;
  char* out = nullptr;
  CHECK(wc_verify(ctx.c, "no-such-suite", "B", 2, 2, 2, &out) == WC_USAGE);
  CHECK(std::string(wc_last_error(ctx.c)).find("no-such-suite") != std::string::npos);
  CHECK(wc_verify(ctx.c, "theorem2", "D", 2, 2, 2, &out) == WC_USAGE);
  CHECK(wc_verify(ctx.c, "theorem2", "B", 2, 2, 3, &out) == WC_USAGE);  // p must be 2
}

TEST_CASE("scale errors") {
  Ctx ctx;
  wc_ctx_set_max_n(ctx.c, 3);
  char* out = nullptr;
  CHECK(wc_verify(ctx.c, "theorem2", "B", 4, 2, 2, &out) == WC_SCALE);
  CHECK(std::string(wc_last_error(ctx.c)).size() > 0);

  Ctx ctx2;
  wc_ctx_set_max_nodes(ctx2.c, 1);
  CHECK(wc_verify(ctx2.c, "uniqueness", "B", 2, 2, 2, &out) == WC_SCALE);
}

TEST_CASE("json output is byte-identical across runs") {
  Ctx a, b;
  char *oa = nullptr, *ob = nullptr;
  REQUIRE(wc_verify(a.c, "theorem2", "B", 2, 2, 2, &oa) == WC_OK);
  REQUIRE(wc_verify(b.c, "theorem2", "B", 2, 2, 2, &ob) == WC_OK);
  CHECK(take(oa) == take(ob));
}

TEST_CASE("text format") {
  Ctx ctx;
  wc_ctx_set_format(ctx.c, "text");
  char* out = nullptr;
  REQUIRE(wc_chain(ctx.c, 2, 2, &out) == WC_OK);
  std::string s = take(out);
  CHECK(s.find('{') == std::string::npos);
  CHECK(s.find("pass") != std::string::npos);
}

TEST_CASE("snf and lattice dot") {
  Ctx ctx;
  char* out = nullptr;
  REQUIRE(wc_snf(ctx.c, "B", 2, 2, &out) == WC_OK);
  std::string s = take(out);
  // ten divisors, exactly one of them even (the kernel is one-dimensional)
  int lines = 0, twos = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '\n') ++lines;
  CHECK(lines == 10);
  CHECK(s.find('2') != std::string::npos);
  (void)twos;

  REQUIRE(wc_lattice_dot(ctx.c, 2, 2, &out) == WC_OK);
  CHECK(take(out).find("digraph") != std::string::npos);
}

TEST_CASE("report-all aggregates suites") {
  Ctx ctx;
  char* out = nullptr;
  REQUIRE(wc_report_all(ctx.c, 2, &out) == WC_OK);
  std::string s = take(out);
  CHECK(s.find("\"suite\": \"theorem2\"") != std::string::npos);
  CHECK(s.find("\"suite\": \"uniqueness\"") != std::string::npos);
  CHECK(s.find("\"fail\"") == std::string::npos);
}
