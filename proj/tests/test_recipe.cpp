#include "doctest.h"

#include "errors.hpp"
#include "recipe.hpp"
#include "support/oracles.hpp"

using namespace exc;

namespace {

const ZPoly kF1{3, 11, -7, -1, 1};
const ZPoly kF2{-13, 16, -4, -2, 1};
const ZPoly kF3{-2, -6, -2, -1, 1};
const ZPoly kF4{9, 0, 6, 3, 0, 1};

LocalGaloisType tame_cyclic(std::uint64_t p, int e) {
  LocalGaloisType t;
  t.kind = LocalKind::TameCyclic;
  t.p = p;
  t.e = e;
  t.f = 1;
  return t;
}

LocalGaloisType tame_dihedral(std::uint64_t p, int m) {
  LocalGaloisType t;
  t.kind = LocalKind::TameDihedral;
  t.p = p;
  t.m = m;
  t.e = m;
  t.f = 2;
  t.b = 1;
  t.t = 0;
  t.m_unramified = true;
  return t;
}

const LocalGaloisType& type_at(const FieldAnalysis& a, std::uint64_t p) { return a.local.at(p).type; }

}  // namespace

TEST_SUITE("serre_recipe") {
  TEST_CASE("weight sets of the corpus") {
    const auto a1 = analyze(kF1, 59);
    CHECK(weight_set(type_at(a1, 59), 59).values == std::set<int>{16, 46});
    const auto a2 = analyze(kF2, 11);
    CHECK(weight_set(type_at(a2, 11), 11).values == std::set<int>{4, 10});
    const auto a4 = analyze(kF4, 3);
    const auto w3 = weight_set(type_at(a4, 3), 3);
    CHECK(w3.values == std::set<int>{2});
    CHECK_FALSE(w3.partition);
    CHECK(w3.outside_window.empty());
  }

  TEST_CASE("ordinary weights against the cyclotomic character derivation") {
    for (auto ell : primes_below(50)) {
      if (ell < 3) continue;
      for (int e : {2, 3, 4, 5}) {
        if ((ell - 1) % e) continue;
        CAPTURE(ell);
        CAPTURE(e);
        const auto o = oracle::ordinary_weights(ell, e);
        const auto w = weight_set(tame_cyclic(ell, e), ell);
        CHECK(w.values == o.values);
        for (auto [k1, k2] : o.pairs) CHECK(k1 + k2 == static_cast<int>(ell) + 1);
        if (e == 5) {
          REQUIRE(w.partition);
          CHECK(w.partition->first == o.plus);
          CHECK(w.partition->second == o.minus);
        } else {
          CHECK_FALSE(w.partition);
        }
      }
    }
  }

  TEST_CASE("supersingular weights against the level 2 fundamental character derivation") {
    for (auto ell : primes_below(50)) {
      if (ell < 3) continue;
      for (int m : {2, 3, 4, 5}) {
        if ((ell + 1) % m) continue;
        CAPTURE(ell);
        CAPTURE(m);
        const auto o = oracle::supersingular_weights(ell, m);
        const auto w = weight_set(tame_dihedral(ell, m), ell);
        CHECK(w.values == o.values);
        for (auto [k1, k2] : o.pairs) CHECK(k1 + k2 == static_cast<int>(ell) + 3);
        if (m == 5) {
          REQUIRE(w.partition);
          CHECK(w.partition->first == o.plus);
          CHECK(w.partition->second == o.minus);
        }
        for (int k : w.values)
          CHECK(w.outside_window.count(k) == (k < 2 || k > static_cast<int>(ell) - 1 ? 1u : 0u));
      }
    }
    // the m = 4 rule at ell = 3 leaves the window
    const auto w = weight_set(tame_dihedral(3, 4), 3);
    CHECK(w.values == std::set<int>{2, 4});
    CHECK(w.outside_window == std::set<int>{4});
  }

  TEST_CASE("epsilon") {
    const auto a4 = analyze(kF4, 3);
    CHECK(epsilon_p(type_at(a4, 23), 23).is_trivial());
    const auto a2 = analyze(kF2, 11);
    CHECK(epsilon_p(type_at(a2, 2), 2).is_trivial());
    LocalGaloisType a4t;
    a4t.kind = LocalKind::PrimitiveA4;
    a4t.p = 2;
    const auto e = epsilon_p(a4t, 2);
    CHECK(e.value(-1) == Rat(1, 2));
    CHECK(e.lift(8).value(5) == 0);
  }

  TEST_CASE("conductor exponents") {
    const auto a4 = analyze(kF4, 3);
    CHECK(n_p(type_at(a4, 23), DirichletChar(1)) == 2);
    const auto a1 = analyze(kF1, 59);
    const auto& d59 = type_at(a1, 59);
    for (const auto& t : enumerate_local_twists(59, 3, 0))
      if (t.c == 3) {
        CHECK(n_p(d59, t.phi) == 6);
        break;
      }
    const auto a2 = analyze(kF2, 11);
    CHECK(n_p(type_at(a2, 2), DirichletChar(1)) == 3);
  }

  TEST_CASE("induced conductor oracle on the tame dihedral types of the corpus") {
    struct Case {
      ZPoly f;
      std::uint64_t ell, p;
    };
    for (const auto& c : {Case{kF1, 7, 59}, Case{kF2, 3, 11}, Case{kF3, 3, 19}, Case{kF4, 3, 23}}) {
      const auto a = analyze(c.f, c.ell);
      const auto& t = type_at(a, c.p);
      const int m = t.kind == LocalKind::TameDihedral ? t.m : t.group_order / 2;
      REQUIRE(t.m_unramified);
      int checked = 0;
      for (const auto& tw : enumerate_local_twists(c.p, 3, 0)) {
        const int n = n_p(t, tw.phi);
        CHECK(n == oracle::induced_conductor(c.p, m, tw.phi));
        CHECK(n == 2 * std::max(1, tw.c));
        ++checked;
      }
      CHECK(checked == static_cast<int>((c.p - 1) * c.p * c.p));
    }
  }

  TEST_CASE("degeneration") {
    const auto a4 = analyze(kF4, 3);
    CHECK(delta_p(type_at(a4, 23), DirichletChar(1), 3) == 1);
    for (const auto& t : enumerate_local_twists(23, 1, 3))
      if (t.c == 1) CHECK(delta_p(type_at(a4, 23), t.phi, 3) == 0);
    const auto a1 = analyze(kF1, 59);
    for (const auto& t : enumerate_local_twists(59, 1, 59)) CHECK(delta_p(type_at(a1, 59), t.phi, 59) == 0);
  }

  TEST_CASE("Serre types of the corpus at twist bound 0") {
    struct Case {
      ZPoly f;
      std::uint64_t ell;
      long N;
      std::set<int> w;
    };
    for (const auto& c : {Case{kF1, 59, 1, {16, 46}}, Case{kF2, 11, 8, {4, 10}}, Case{kF3, 19, 4, {6, 16}},
                          Case{kF4, 3, 23, {2}}}) {
      const auto st = enumerate_serre_types(analyze(c.f, c.ell), c.ell, {}, 0);
      REQUIRE(st.families.size() == 1);
      const auto& fam = st.families[0];
      CHECK(fam.N == c.N);
      CHECK(fam.weights.values == c.w);
      CHECK(fam.nu.chi.is_trivial());
      CHECK_FALSE(fam.partial);
    }
    const auto st = enumerate_serre_types(analyze(kF4, 3), 3, {}, 0);
    bool note = false;
    for (const auto& n : st.families[0].notes) note = note || n.rfind("modularity assumed", 0) == 0;
    CHECK(note);
  }

  TEST_CASE("families at larger bounds: nu prime to ell, N prime to ell, witnesses re-evaluate") {
    struct Case {
      ZPoly f;
      std::uint64_t ell;
      int bound;
    };
    for (const auto& c : {Case{kF2, 11, 3}, Case{kF3, 19, 3}, Case{kF4, 3, 1}, Case{kF1, 59, 0}}) {
      const auto a = analyze(c.f, c.ell);
      const auto st = enumerate_serre_types(a, c.ell, {}, c.bound);
      CHECK(st.families.size() >= 1);
      for (const auto& fam : st.families) {
        CHECK(fam.nu.chi.order() % c.ell != 0);
        CHECK(fam.N % static_cast<unsigned long>(c.ell) != 0);
        CHECK(fam.N % static_cast<unsigned long>(fam.nu.chi.conductor()) == 0);
        for (const auto& w : fam.twists) {
          const auto ev = evaluate_twist(a, c.ell, w);
          CHECK(ev.N == fam.N);
          CHECK(ev.nu == fam.nu);
        }
      }
    }
  }

  TEST_CASE("auxiliary twist") {
    const auto a2 = analyze(kF2, 11);
    const auto st = enumerate_serre_types(a2, 11, {}, 0);
    const auto& fam = st.families.at(0);
    const auto t = auxiliary_twist(fam, DirichletChar::legendre(5), a2.ramified_primes);
    CHECK(t.N == 200);
    CHECK(equivalent(t.nu.chi, fam.nu.chi));

    const auto a4 = analyze(kF4, 3);
    const auto f4 = enumerate_serre_types(a4, 3, {}, 0).families.at(0);
    const DirichletChar phi(11, 5, {1});
    const auto u = auxiliary_twist(f4, phi, a4.ramified_primes);
    CHECK(u.N == 23 * 121);
    CHECK(u.nu.chi.order() == 5);
    CHECK(u.nu.chi.conductor() == 11);
    for (const auto& [x, v] : oracle::char_table(u.nu.chi)) {
      Rat expect = 2 * oracle::char_table(phi.lift(u.nu.chi.modulus())).at(x);
      if (expect >= 1) expect -= 1;
      CHECK(v == expect);
    }
    CHECK_THROWS_AS(auxiliary_twist(fam, DirichletChar::legendre(11), a2.ramified_primes), DomainError);
  }

  TEST_CASE("corollary table") {
    auto row = corollary_table(Variant2::M4, 0);
    CHECK(row.n == 3);
    CHECK(row.epsilon.is_trivial());
    row = corollary_table(Variant2::M2, 5);
    CHECK(row.n == 10);
    CHECK(row.epsilon.value(-1) == Rat(1, 2));
    CHECK(row.epsilon.lift(8).value(5) == 0);
    row = corollary_table(Variant2::Unramified, 0);
    CHECK(row.n == 0);
    CHECK(row.epsilon.is_trivial());
    for (int c = 0; c <= 8; ++c) {
      CHECK(corollary_table(Variant2::Unramified, c).n == 2 * c);
      CHECK(corollary_table(Variant2::M2, c).n == (c <= 3 ? 7 : 2 * c));
      CHECK(corollary_table(Variant2::M3, c).n == (c <= 3 ? 7 : 2 * c));
      CHECK(corollary_table(Variant2::M3, c).epsilon.is_trivial());
      CHECK(corollary_table(Variant2::M4, c).n == (c <= 1 ? 3 : 2 * c));
    }
  }

  TEST_CASE("external-reference cases are reported, not guessed") {
    LocalGaloisType t;
    t.kind = LocalKind::DihedralTwoPower;
    t.p = 2;
    t.group_order = 8;
    CHECK_THROWS_AS(n_p(t, DirichletChar(1)), ExternalReferenceError);
  }
}
