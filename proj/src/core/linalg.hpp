#pragma once

#include "arith.hpp"

#include <cstdint>
#include <vector>

namespace exc::linalg {

using ZMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;
using FMat = std::vector<std::vector<std::uint64_t>>;
using FVec = std::vector<std::uint64_t>;

QMat identity(int n);
QMat mul(const QMat& a, const QMat& b);
QMat inverse(const QMat& a);
Rat det(const QMat& a);
std::vector<Rat> row_times(const std::vector<Rat>& v, const QMat& m);

/// Hermite normal form basis (upper triangular, positive pivots) of the full
/// rank lattice spanned by the rows of gens in Z^n.
ZMat hnf_basis(ZMat gens, int n);

/// Basis of { v : v * M = 0 } over F_p, with M of size rows x cols.
std::vector<FVec> left_kernel(const FMat& m, std::uint64_t p);
/// Rank over F_p.
int rank_mod_p(FMat m, std::uint64_t p);

}  // namespace exc::linalg
