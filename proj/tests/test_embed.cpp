#include "doctest.h"

#include "embed.hpp"
#include "errors.hpp"

using namespace exc;

TEST_SUITE("a5_embedding") {
  TEST_CASE("fields") {
    GaloisField F(3, 4);
    CHECK(F.size() == 81);
    CHECK(F.modulus() == PrimeFieldPoly(3, ZPoly{2, 1, 0, 0, 1}));
    const auto g = F.primitive_element();
    // generator: g^((q-1)/r) != 1 for r in {2, 5}
    CHECK_FALSE(F.pow(g, 40) == F.one());
    CHECK_FALSE(F.pow(g, 16) == F.one());
    CHECK(F.pow(g, 80) == F.one());
    for (std::uint64_t i = 1; i < 81; ++i) CHECK(F.mul(F.from_index(i), F.inv(F.from_index(i))) == F.one());
  }

  TEST_CASE("ell = 5") {
    GaloisField F(5, 1);
    const auto [x, y] = build_embedding(F, 1);
    CHECK(verify_presentation(F, x, y));
    CHECK(generated_group_order(F, x, y) == 60);
  }

  TEST_CASE("ell = 3 over F_81, both powers") {
    GaloisField F(3, 4);
    std::vector<std::vector<std::string>> prints;
    for (int power : {1, 2}) {
      const auto [x, y] = build_embedding(F, power);
      CHECK(verify_presentation(F, x, y));
      CHECK(generated_group_order(F, x, y) == 60);
      prints.push_back(trace_fingerprint(F, x, y));
    }
    CHECK(prints[0] != prints[1]);
  }

  TEST_CASE("other fields where 5 | q - 1") {
    for (auto [ell, m] : std::vector<std::pair<std::uint64_t, int>>{{11, 1}, {7, 4}, {19, 2}}) {
      GaloisField F(ell, m);
      const auto [x, y] = build_embedding(F, 1);
      CHECK(verify_presentation(F, x, y));
      CHECK(generated_group_order(F, x, y) == 60);
    }
    CHECK_THROWS_AS(build_embedding(GaloisField(7, 1), 1), DomainError);
    CHECK_THROWS_AS(build_embedding(GaloisField(2, 4), 1), DomainError);
  }

  TEST_CASE("cyclotomic presentation") {
    for (int power : {1, 2}) {
      const auto [x, y] = build_embedding_cyclotomic(power);
      CHECK(verify_presentation(x, y));
    }
    CHECK(embed_check_cyclotomic().at("ok").get<bool>());
  }

  TEST_CASE("degenerate generators") {
    GaloisField F(5, 1);
    const auto I = mat_identity(F);
    CHECK(verify_presentation(F, I, I));
    CHECK(generated_group_order(F, I, I) == 1);
  }

  TEST_CASE("y replaced by y^2 at ell = 5") {
    // outcome recorded from direct computation: the relation (x y^2)^3 = 1
    // fails projectively, while the two matrices still generate all of A5
    GaloisField F(5, 1);
    const auto [x, y] = build_embedding(F, 1);
    const auto y2 = mat_mul(F, y, y);
    CHECK_FALSE(verify_presentation(F, x, y2));
    CHECK(generated_group_order(F, x, y2) == 60);
  }

  TEST_CASE("embed_check report") {
    const auto j = embed_check(3, 0);
    CHECK(j.at("field").at("m") == 4);
    CHECK(j.at("ok").get<bool>());
    CHECK(j.at("fingerprints_distinct").get<bool>());
    CHECK(embed_check(5, 0).at("embeddings").size() == 1);
  }
}
