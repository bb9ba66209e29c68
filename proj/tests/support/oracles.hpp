#pragma once

// Reference computations used only by the tests. Nothing here calls the
// library routine it is meant to check.

#include "arith.hpp"
#include "character.hpp"
#include "poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using exc::Int;
using exc::Rat;

/// Determinant by fraction-free Gaussian elimination (Bareiss).
Int bareiss_det(std::vector<std::vector<Int>> m);

/// Discriminant from the determinant of the Sylvester matrix of f and f'.
Int sylvester_discriminant(const exc::ZPoly& f);

/// Same, with 128-bit arithmetic; only for small coefficients (quintic
/// searches with |a_i| <= 20).
__int128 small_discriminant(const std::vector<long>& coeffs);

/// Real-root count from Durand-Kerner root approximations; nullopt when the
/// iteration does not settle or a root sits too close to the real axis to call.
std::optional<int> numeric_real_roots(const exc::ZPoly& f);

/// Degrees of the irreducible factors of f mod p (with multiplicity), found by
/// trial division with every monic polynomial of degree <= deg/2. Small p only.
std::vector<int> brute_factor_degrees(const exc::ZPoly& f, std::uint64_t p);

/// Values of chi on all units mod its modulus, built from the generator
/// exponents by walking the whole group.
std::map<std::uint64_t, Rat> char_table(const exc::DirichletChar& chi);

/// Smallest d | N such that chi is trivial on units congruent to 1 mod d.
std::uint64_t brute_conductor(const exc::DirichletChar& chi);

struct WeightOracle {
  std::set<int> values;
  std::set<int> plus, minus;  // filled when the inertia image has order 5
  std::vector<std::pair<int, int>> pairs;
};

/// Ordinary case: inertia acts through chi^a + 1 with projective image of
/// order exactly e; weight a + 1.
WeightOracle ordinary_weights(std::uint64_t ell, int e);

/// Supersingular case: inertia acts through psi^a + psi^(ell a), psi of level 2,
/// with projective image of order exactly m; weights a + 1 and ell + 2 - a.
WeightOracle supersingular_weights(std::uint64_t ell, int m);

/// Conductor exponent of Ind_M^{Q_p}(beta * (phi o Norm)) for M the unramified
/// quadratic extension of Q_p (p odd) and beta a tame character of M^x of order
/// m with beta^p = beta^-1 on units. Computed on the unit filtration of M.
int induced_conductor(std::uint64_t p, int m, const exc::DirichletChar& phi);

}  // namespace oracle
