#include "doctest.h"

#include "fpoly.hpp"
#include "padic.hpp"
#include "poly.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace exc;

namespace {

ZPoly random_poly(std::mt19937_64& rng, int deg, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<Int> c;
  for (int i = 0; i < deg; ++i) c.push_back(d(rng));
  long lead = 0;
  while (lead == 0) lead = d(rng);
  c.push_back(lead);
  return ZPoly(c);
}

const ZPoly kF1{3, 11, -7, -1, 1};
const ZPoly kF2{-13, 16, -4, -2, 1};
const ZPoly kF4{9, 0, 6, 3, 0, 1};

}  // namespace

TEST_SUITE("exact_poly") {
  TEST_CASE("discriminant small cases") {
    CHECK(discriminant(ZPoly{-1, 0, 1}) == 4);
    CHECK(discriminant(ZPoly{1, 0, 1}) == -4);
    CHECK(discriminant(ZPoly{-2, 0, 1}) == 8);
  }

  TEST_CASE("discriminant agrees with the Sylvester determinant") {
    for (const auto& f : {kF1, kF2, kF4, ZPoly{-2, -6, -2, -1, 1}}) CHECK(discriminant(f) == oracle::sylvester_discriminant(f));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      const ZPoly f = random_poly(rng, 2 + i % 6, 30);
      CHECK(discriminant(f) == oracle::sylvester_discriminant(f));
    }
  }

  TEST_CASE("quintic discriminant is 3^4 23^2 times a square") {
    const Int d = discriminant(kF4);
    CHECK(d > 0);
    CHECK(d % (81 * 529) == 0);
    CHECK(is_square(d / (81 * 529)));
    CHECK(valuation(d, Int(3)) % 2 == 0);
  }

  TEST_CASE("QDelta discriminant has prime support {59} up to squares") {
    Int d = oracle::sylvester_discriminant(kF1);
    CHECK(discriminant(kF1) == d);
    for (const auto& [p, e] : factor(d))
      if (p != 59) CHECK(e % 2 == 0);
    CHECK(valuation(d, Int(59)) % 2 == 1);
  }

  TEST_CASE("discriminant of a product") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
      const ZPoly f = random_poly(rng, 1 + i % 3, 9);
      const ZPoly g = random_poly(rng, 1 + (i / 3) % 3, 9);
      const Int r = resultant(f, g);
      CHECK(discriminant(f * g) == discriminant(f) * discriminant(g) * r * r);
    }
  }

  TEST_CASE("Sturm counts") {
    CHECK(sturm_real_roots(ZPoly{1, 0, 1}) == 0);
    CHECK(sturm_real_roots(ZPoly{-2, 0, 1}) == 2);
    CHECK(sturm_real_roots(kF1) < 4);
    CHECK(sturm_real_roots(kF1) == 2);
  }

  TEST_CASE("Sturm agrees with numerical root isolation") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
      const ZPoly f = random_poly(rng, 1 + i % 5, 50);
      if (!is_squarefree(f)) continue;
      const auto num = oracle::numeric_real_roots(f);
      if (!num) continue;
      const int real = sturm_real_roots(f);
      CHECK(real == *num);
      CHECK((f.degree() - real) % 2 == 0);
      ++checked;
    }
    CHECK(checked > 350);
  }

  TEST_CASE("factor_mod_p examples") {
    auto fs = factor_mod_p(PrimeFieldPoly(5, ZPoly{1, 0, 1}));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == PrimeFieldPoly(5, ZPoly{2, 1}));
    CHECK(fs[1].factor == PrimeFieldPoly(5, ZPoly{3, 1}));
    CHECK(is_irreducible(PrimeFieldPoly(3, ZPoly{1, 0, 1})));
  }

  TEST_CASE("factor_mod_p matches exhaustive search") {
    CHECK(factor_degrees(PrimeFieldPoly(7, kF1)) == oracle::brute_factor_degrees(kF1, 7));
    std::mt19937_64 rng(99);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      for (int i = 0; i < 30; ++i) {
        ZPoly f = random_poly(rng, 2 + i % 5, 40);
        if (f.lead() % static_cast<unsigned long>(p) == 0) continue;
        CHECK(factor_degrees(PrimeFieldPoly(p, f)) == oracle::brute_factor_degrees(f, p));
      }
    }
  }

  TEST_CASE("factor_mod_p multiplies back") {
    std::mt19937_64 rng(5);
    const auto primes = primes_below(100);
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t p = primes[rng() % primes.size()];
      const ZPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 8), 1000);
      const PrimeFieldPoly f(p, g);
      if (f.is_zero() || f.degree() < 1) continue;
      PrimeFieldPoly prod = PrimeFieldPoly::one(p);
      for (const auto& [h, e] : factor_mod_p(f)) {
        CHECK(is_irreducible(h));
        for (int k = 0; k < e; ++k) prod = prod * h;
      }
      CHECK(prod == f.monic());
    }
  }

  TEST_CASE("p-adic splitting") {
    auto s = padic_splitting(ZPoly{1, 0, 1}, 5);
    REQUIRE(s.factors.size() == 2);
    for (const auto& f : s.factors) CHECK((f.e == 1 && f.f == 1));

    auto q = padic_splitting(kF4, 3);
    int total = 0;
    for (const auto& f : q.factors) total += f.e * f.f;
    CHECK(total == 5);
    bool wild = false;
    for (const auto& f : q.factors) wild = wild || f.e % 3 == 0;
    CHECK(wild);
    CHECK(q.disc_valuation == 4);

    auto e = padic_splitting(kF2, 11);
    REQUIRE(e.factors.size() == 1);
    CHECK(e.factors[0].e == 4);
    CHECK(e.factors[0].f == 1);
  }

  TEST_CASE("p-adic splitting degree sums and the unramified case") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 150; ++i) {
      ZPoly f = random_poly(rng, 2 + i % 4, 20);
      if (!is_squarefree(f)) continue;
      const Int disc = discriminant(f);
      for (std::uint64_t p : {2, 3, 5, 7}) {
        if (f.lead() % static_cast<unsigned long>(p) == 0) continue;
        const auto s = padic_splitting(f, p);
        int total = 0;
        std::vector<int> fs;
        for (const auto& x : s.factors) {
          total += x.e * x.f;
          if (x.e == 1) fs.push_back(x.f);
        }
        CHECK(total == f.degree());
        if (disc % static_cast<unsigned long>(p) != 0) {
          std::sort(fs.begin(), fs.end());
          CHECK(fs.size() == s.factors.size());
          CHECK(fs == factor_degrees(PrimeFieldPoly(p, f)));
        }
      }
    }
  }
}
