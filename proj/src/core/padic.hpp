#pragma once

#include "poly.hpp"

#include <cstdint>
#include <vector>

namespace exc {

struct PAdicFactor {
  ZPoly approximant;  // monic, coefficients reduced to [0, p^precision)
  int e = 1;
  int f = 1;
};

/// Splitting of p in the stem field Q[x]/(f).
///
/// Approximants are factors of the monic transform lc^(n-1) f(x/lc), which
/// coincides with f for monic input.
struct PAdicFactorization {
  std::uint64_t p = 2;
  int precision = 0;
  std::vector<PAdicFactor> factors;
  int disc_valuation = 0;   // v_p of the stem field discriminant
  int index_valuation = 0;  // v_p [O_K : Z[theta]] for the monic transform
  bool dedekind_maximal = true;
};

/// Dedekind criterion: is Z[x]/(g) maximal at p (g monic)?
bool dedekind_p_maximal(const ZPoly& g, std::uint64_t p);

PAdicFactorization padic_splitting(const ZPoly& f, std::uint64_t p, int max_precision = 256);

/// det(x I - m), highest degree coefficient first, by Berkowitz's
/// division-free algorithm.
std::vector<Int> charpoly_berkowitz(const std::vector<std::vector<Int>>& m);

}  // namespace exc
