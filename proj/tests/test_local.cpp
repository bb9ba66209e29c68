#include "doctest.h"

#include "errors.hpp"
#include "local.hpp"
#include "support/oracles.hpp"

#include <numeric>
#include <random>

using namespace exc;

namespace {

const ZPoly kF1{3, 11, -7, -1, 1};
const ZPoly kF2{-13, 16, -4, -2, 1};
const ZPoly kF3{-2, -6, -2, -1, 1};
const ZPoly kF4{9, 0, 6, 3, 0, 1};

const LocalAnalysis& at(const FieldAnalysis& a, std::uint64_t p) { return a.local.at(p); }

// Random A4/S4/A5 fields with small coefficients, for the invariant checks.
std::vector<ZPoly> random_fields(int want, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<ZPoly> out;
  for (int it = 0; static_cast<int>(out.size()) < want && it < 20000; ++it) {
    const bool quintic = it % 3 == 0;
    std::vector<Int> c;
    for (int i = 0; i < (quintic ? 4 : 4); ++i) c.emplace_back(d(rng));
    if (quintic) c.emplace_back(0);
    c.emplace_back(1);
    if (c[0] == 0) continue;
    ZPoly f(c);
    if (discriminant(f) == 0) continue;
    if (quintic && !is_square(discriminant(f))) continue;
    try {
      if (screen_irreducible(f).rejected) continue;
      if (!galois_group(f).exceptional()) continue;
    } catch (const Error&) {
      continue;
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_SUITE("local_analyzer") {
  TEST_CASE("corpus local types") {
    const auto a1 = analyze(kF1, 59);
    const auto& t59 = at(a1, 59).type;
    CHECK(t59.kind == LocalKind::DihedralTwoPower);
    CHECK(t59.group_order == 8);
    CHECK(t59.m_unramified);
    CHECK(t59.b == 1);
    CHECK(t59.t == 0);

    const auto a2 = analyze(kF2, 11);
    CHECK(at(a2, 2).type.kind == LocalKind::PrimitiveS4);
    CHECK(at(a2, 2).type.variant == WeilVariant::M4);
    CHECK(at(a2, 11).type.kind == LocalKind::DihedralTwoPower);
    const auto w = classify_weil_2adic(kF2);
    CHECK(w.variant == WeilVariant::M4);

    const auto a3 = analyze(kF3, 19);
    CHECK(at(a3, 2).type.kind == LocalKind::TameDihedral);
    CHECK(at(a3, 2).type.m == 3);
    CHECK_THROWS_AS(classify_weil_2adic(kF3), DomainError);

    const auto a4 = analyze(kF4, 3);
    const auto& t23 = at(a4, 23).type;
    CHECK(t23.kind == LocalKind::TameDihedral);
    CHECK(t23.m == 3);
    CHECK(t23.m_unramified);
    const auto& t3 = at(a4, 3).type;
    CHECK(t3.kind == LocalKind::WildDihedralEll);
    CHECK(t3.m == 3);
    CHECK(t3.totally_ramified);
    CHECK(t3.regime == Regime::Peu);
  }

  TEST_CASE("analysis summary") {
    CHECK(analyze(kF1, 59).S == 1);
    CHECK(analyze(kF2, 11).S == 2);
    CHECK(analyze(kF3, 19).S == 2);
    const auto a4 = analyze(kF4, 3);
    CHECK(a4.S == 23);
    CHECK(a4.ell_ramified);
    CHECK(a4.field_disc == 3 * 3 * 3 * 3 * 23 * 23);
    CHECK(a4.ramified_primes == std::vector<std::uint64_t>{3, 23});
    CHECK(a4.to_json().at("verdict") == "ok");
    // ell unramified in K
    const auto a1 = analyze(kF1, 7);
    CHECK_FALSE(a1.ell_ramified);
    CHECK(a1.S == 59);
  }

  TEST_CASE("negative analyses") {
    CHECK(analyze(ZPoly{1, 0, 0, 1}, 5).definitive_negative());
    CHECK(analyze(ZPoly{-2, 0, 0, 0, 1}, 5).definitive_negative());  // D4
    CHECK_THROWS_AS(analyze(kF1, 2), DomainError);
    CHECK_THROWS_AS(analyze(kF1, 9), DomainError);
  }

  TEST_CASE("peu/tres") {
    CHECK(classify_peu_tres(kF4, 3) == Regime::Peu);
    CHECK_THROWS_AS(classify_peu_tres(kF4, 5), DomainError);
    CHECK_THROWS_AS(classify_peu_tres(kF1, 3), DomainError);  // 3 unramified
    // the thresholds are data: moving the peu row changes the answer
    PeuTresTable shifted;
    shifted.quintic = {{4, Regime::Tres}};
    CHECK(classify_peu_tres(kF4, 3, shifted) == Regime::Tres);
    PeuTresTable empty;
    empty.quintic.clear();
    CHECK_THROWS_AS(classify_peu_tres(kF4, 3, empty), UnclassifiedError);
  }

  TEST_CASE("unramified primes") {
    const GlobalGroup g = galois_group(kF1);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      const auto la = analyze_prime(kF1, g, p);
      CHECK(la.type.kind == LocalKind::Unramified);
      int lcm = 1;
      for (int d : oracle::brute_factor_degrees(kF1, p)) lcm = std::lcm(lcm, d);
      CHECK(la.type.f == lcm);
    }
  }

  TEST_CASE("discriminant of the stem field") {
    for (const auto& f : {kF1, kF2, kF3, kF4}) {
      const Int dk = field_discriminant(f);
      const Int df = oracle::sylvester_discriminant(f);
      CHECK(sgn(dk) == sgn(df));
      CHECK(df % dk == 0);
      CHECK(is_square(Int(df / dk)));
    }
    CHECK(field_discriminant(kF1) == -205379);
    CHECK(field_discriminant(kF2) == -21296);
    CHECK(field_discriminant(kF3) == -27436);
  }

  TEST_CASE("weil fingerprint table") {
    const auto& rows = weil_fingerprint_table();
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].variants == std::vector<WeilVariant>{WeilVariant::M4});
    CHECK(rows[1].variants.size() == 2);
    const auto parsed = parse_weil_table(
        R"({"rows":[{"stem_disc_v2":6,"cubic_splitting":[[3,1]],"cubic_disc_v2":2,"variants":["M3"]}]})");
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].variants == std::vector<WeilVariant>{WeilVariant::M3});
    CHECK(parsed[0].cubic_splitting == std::vector<std::pair<int, int>>{{3, 1}});
    CHECK_THROWS_AS(parse_weil_table("{\"rows\":[{}]}"), FormatError);
    CHECK_THROWS_AS(parse_weil_table("not json"), FormatError);
    CHECK_THROWS_AS(
        parse_weil_table(R"({"rows":[{"stem_disc_v2":6,"cubic_splitting":[],"cubic_disc_v2":2,"variants":["M9"]}]})"),
        FormatError);
  }

  TEST_CASE("type serialization round-trips") {
    const auto a4 = analyze(kF4, 3);
    for (const auto& [p, la] : a4.local) CHECK(LocalGaloisType::from_json(la.type.to_json()) == la.type);
    const auto a2 = analyze(kF2, 11);
    for (const auto& [p, la] : a2.local) CHECK(LocalGaloisType::from_json(la.type.to_json()) == la.type);
  }

  TEST_CASE("invariants on random fields") {
    const auto fields = random_fields(60, 777);
    CHECK(fields.size() >= 40);
    int local_checked = 0;
    for (const auto& f : fields) {
      CAPTURE(f.to_string());
      const GlobalGroup g = galois_group(f);
      const Int dk = field_discriminant(f);
      const Int df = oracle::sylvester_discriminant(f);
      CHECK(sgn(dk) == sgn(df));
      CHECK(is_square(Int(df / dk)));
      Int product = 1;
      for (const auto& P : prime_support(dk)) {
        const auto p = to_u64(P);
        LocalAnalysis la;
        try {
          la = analyze_prime(f, g, p);
        } catch (const Error& e) {
          // only the documented gaps may appear
          const auto k = e.kind();
          CHECK((k == ErrorKind::ExternalReference || k == ErrorKind::Unclassified || k == ErrorKind::Ambiguous));
          for (int i = 0; i < valuation(dk, P); ++i) product *= P;
          continue;
        }
        ++local_checked;
        for (int i = 0; i < la.disc_valuation; ++i) product *= P;
        int deg = 0, tame = 0;
        bool wild = false;
        for (auto [e, ff] : la.splitting) {
          deg += e * ff;
          if (e % static_cast<int>(p) == 0) wild = true;
          else tame += ff * (e - 1);
        }
        CHECK(deg == f.degree());
        if (!wild) CHECK(la.disc_valuation == tame);
        else CHECK(la.disc_valuation > tame);
        CHECK(la.disc_valuation == valuation(dk, P));
        const auto& t = la.type;
        if (t.kind == LocalKind::TameCyclic) CHECK((p - 1) % t.e == 0);
        if (t.kind == LocalKind::TameDihedral) CHECK((p + 1) % t.m == 0);
        if (t.kind == LocalKind::WildDihedralEll) CHECK(t.m == static_cast<int>(p));
        if (t.kind == LocalKind::PrimitiveA4 || t.kind == LocalKind::PrimitiveS4) CHECK(p == 2);
      }
      CHECK(abs(dk) == product);
    }
    CHECK(local_checked > 60);
  }
}
