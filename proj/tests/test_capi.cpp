#include "doctest.h"

#include "exc/exc.h"
#include "json.hpp"

#include <string>

using nlohmann::json;

namespace {

struct Ctx {
  exc_context* c = exc_context_new();
  ~Ctx() { exc_context_free(c); }
};

struct Res {
  exc_result* r = nullptr;
  ~Res() { exc_result_free(r); }
  json doc() const { return json::parse(exc_result_json(r)); }
};

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("serre types through the C interface") {
    Ctx ctx;
    Res res;
    REQUIRE(exc_serre_types(ctx.c, "[3,11,-7,-1,1]", 59, 0, &res.r) == EXC_OK);
    CHECK(exc_result_verdict(res.r) == EXC_VERDICT_DEFINITIVE);
    const auto j = res.doc();
    REQUIRE(j.at("families").size() == 1);
    CHECK(j["families"][0]["N"] == 1);
    CHECK(j["families"][0]["weights"]["values"] == json::array({16, 46}));
    CHECK(j["families"][0]["nu_trivial"] == true);
    CHECK(std::string(exc_last_error(ctx.c)).empty());
  }

  TEST_CASE("negative verdicts") {
    Ctx ctx;
    Res res;
    REQUIRE(exc_analyze(ctx.c, "[1,0,0,1]", 7, &res.r) == EXC_OK);
    CHECK(exc_result_verdict(res.r) == EXC_VERDICT_NEGATIVE);
    CHECK(res.doc().at("reason") == "group OTHER (degree 3 unsupported)");
  }

  TEST_CASE("detect") {
    Ctx ctx;
    Res res;
    REQUIRE(exc_detect(ctx.c, "8", 4, "trivial", 11, EXC_DATA_DIR "/corpus.csv", &res.r) == EXC_OK);
    const auto j = res.doc();
    REQUIRE(j.at("matches").size() == 1);
    CHECK(j["matches"][0]["quality"] == "exact");
    CHECK(j["matches"][0]["label"] == "s4.2-11");
    Res none;
    REQUIRE(exc_detect(ctx.c, "1", 4, nullptr, 7, nullptr, &none.r) == EXC_OK);
    CHECK(exc_result_verdict(none.r) == EXC_VERDICT_NEGATIVE);
    Res nu;
    REQUIRE(exc_detect(ctx.c, "8", 4, R"({"modulus":1,"order":1,"exponents":{}})", 11, nullptr, &nu.r) == EXC_OK);
    CHECK(nu.doc().at("matches").size() == 1);
  }

  TEST_CASE("error codes") {
    Ctx ctx;
    exc_result* r = nullptr;
    CHECK(exc_analyze(ctx.c, "[1,2", 7, &r) == EXC_E_FORMAT);
    CHECK(r == nullptr);
    CHECK_FALSE(std::string(exc_last_error(ctx.c)).empty());
    CHECK(exc_analyze(ctx.c, "[3,11,-7,-1,1]", 4, &r) == EXC_E_DOMAIN);
    CHECK(exc_analyze(ctx.c, nullptr, 7, &r) == EXC_E_INVALID_ARGUMENT);
    CHECK(exc_analyze(ctx.c, "[3,11,-7,-1,1]", 7, nullptr) == EXC_E_INVALID_ARGUMENT);
    CHECK(exc_analyze(nullptr, "[3,11,-7,-1,1]", 7, &r) == EXC_E_INVALID_ARGUMENT);
    CHECK(exc_detect(ctx.c, "8", 4, "trivial", 11, "/nonexistent.csv", &r) == EXC_E_IO);
    CHECK(exc_detect(ctx.c, "eight", 4, "trivial", 11, nullptr, &r) == EXC_E_INVALID_ARGUMENT);
    CHECK(exc_corollary1(ctx.c, "M9", 0, &r) == EXC_E_FORMAT);
    CHECK(exc_serre_types(ctx.c, "[3,11,-7,-1,1]", 59, -1, &r) == EXC_E_INVALID_ARGUMENT);
    // a successful call clears the message
    Res ok;
    REQUIRE(exc_corollary1(ctx.c, nullptr, -1, &ok.r) == EXC_OK);
    CHECK(std::string(exc_last_error(ctx.c)).empty());
    CHECK(std::string(exc_status_name(EXC_E_EXTERNAL_REFERENCE)) == "external_reference");
  }

  TEST_CASE("identical calls give identical output") {
    Ctx ctx;
    const char* polys[] = {"[3,11,-7,-1,1]", "[-13,16,-4,-2,1]", "[-2,-6,-2,-1,1]", "[9,0,6,3,0,1]"};
    const std::uint64_t ells[] = {59, 11, 19, 3};
    for (int i = 0; i < 4; ++i) {
      Res a, b;
      REQUIRE(exc_serre_types(ctx.c, polys[i], ells[i], 1, &a.r) == EXC_OK);
      REQUIRE(exc_serre_types(ctx.c, polys[i], ells[i], 1, &b.r) == EXC_OK);
      CHECK(std::string(exc_result_json(a.r)) == exc_result_json(b.r));
    }
    Res a, b;
    REQUIRE(exc_detect(ctx.c, "16", 4, "trivial", 11, nullptr, &a.r) == EXC_OK);
    REQUIRE(exc_detect(ctx.c, "16", 4, "trivial", 11, nullptr, &b.r) == EXC_OK);
    CHECK(std::string(exc_result_json(a.r)) == exc_result_json(b.r));
  }

  TEST_CASE("corollary rows") {
    Ctx ctx;
    Res res;
    REQUIRE(exc_corollary1(ctx.c, nullptr, -1, &res.r) == EXC_OK);
    const auto rows = res.doc().at("rows");
    CHECK(rows.size() == 7);
    Res one;
    REQUIRE(exc_corollary1(ctx.c, "M2", 5, &one.r) == EXC_OK);
    const auto r = one.doc().at("rows").at(0);
    CHECK(r["n"] == 10);
    CHECK(r["epsilon_values"]["-1"] == -1);
    CHECK(r["epsilon_values"]["5"] == 1);
  }

  TEST_CASE("local and embed") {
    Ctx ctx;
    Res l;
    REQUIRE(exc_local(ctx.c, "[-13,16,-4,-2,1]", 2, &l.r) == EXC_OK);
    CHECK(l.doc()["analysis"]["type"]["variant"] == "M4");
    Res e;
    REQUIRE(exc_embed_check(ctx.c, 5, 0, &e.r) == EXC_OK);
    CHECK(e.doc()["embeddings"][0]["group_order"] == 60);
  }
}
