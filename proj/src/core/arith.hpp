#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace exc {

using Int = mpz_class;
using Rat = mpq_class;

/// p-adic valuation of a nonzero integer.
int valuation(const Int& n, const Int& p);
int valuation(const Rat& q, const Int& p);

bool is_prime(const Int& n);
bool is_prime(std::uint64_t n);

Int isqrt(const Int& n);
bool is_square(const Int& n);

/// Prime factorization of |n| (n != 0) as sorted (prime, exponent) pairs.
/// Trial division followed by Pollard-Brent; fine for the 40-60 digit
/// discriminants that show up here.
std::vector<std::pair<Int, int>> factor(const Int& n);
std::vector<Int> prime_support(const Int& n);

std::vector<std::uint64_t> primes_below(std::uint64_t bound);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
std::int64_t to_i64(const Int& n);
std::uint64_t to_u64(const Int& n);

/// Smallest positive integer that is a primitive root modulo p^2 (and hence
/// modulo every power of the odd prime p).
std::uint64_t canonical_primitive_root(std::uint64_t p);

/// Smallest x >= 0 with g^x = a (mod m), where g has multiplicative order n.
/// Pohlig-Hellman over the factorization of n.
std::uint64_t discrete_log(std::uint64_t a, std::uint64_t g, std::uint64_t n, std::uint64_t m);

std::uint64_t ipow(std::uint64_t b, unsigned e);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace exc
