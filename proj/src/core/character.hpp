#pragma once

#include "arith.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace exc {

/// A cyclic factor of (Z/NZ)^x with its canonical generator.
/// Odd p^k: the smallest primitive root mod p^2. 2^k: -1 (k >= 2) and 5 (k >= 3).
struct CharGenerator {
  std::uint64_t p = 0;
  int k = 0;
  std::int64_t generator = 0;  // as a residue mod p^k; -1 allowed
  std::uint64_t cyclic_order = 1;
  std::string label() const;  // "p^k:g"
};

std::vector<CharGenerator> canonical_generators(std::uint64_t modulus);

/// Character of (Z/NZ)^x. The value on the i-th canonical generator is
/// zeta_n^exponents[i], n = order. Always stored with n minimal.
class DirichletChar {
 public:
  DirichletChar() : DirichletChar(1) {}
  explicit DirichletChar(std::uint64_t modulus);  // trivial character
  DirichletChar(std::uint64_t modulus, std::uint64_t order, std::vector<std::uint64_t> exponents);

  static DirichletChar trivial(std::uint64_t modulus = 1) { return DirichletChar(modulus); }
  /// Quadratic character of conductor p (odd p).
  static DirichletChar legendre(std::uint64_t p);
  /// Character mod 2^k with the given signs on -1 and 5 (+1/-1 each).
  static DirichletChar two_adic_quadratic(int at_minus_one, int at_five);

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint64_t>& exponents() const { return exps_; }
  std::vector<CharGenerator> generators() const { return canonical_generators(modulus_); }
  bool is_trivial() const { return order_ == 1; }

  /// chi(a) = zeta_order^result; throws for a not prime to the modulus.
  std::uint64_t log_value(std::int64_t a) const;
  /// chi(a) as an element of Q/Z in [0, 1).
  Rat value(std::int64_t a) const;

  std::uint64_t conductor() const;
  /// Exponent of p in the conductor.
  int conductor_exponent(std::uint64_t p) const;
  /// Same character on the larger modulus m (modulus() must divide m).
  DirichletChar lift(std::uint64_t m) const;
  /// The primitive character inducing this one.
  DirichletChar primitive() const;
  /// Restriction to the p-part: a character mod p^{v_p(N)}.
  DirichletChar component(std::uint64_t p) const;

  DirichletChar operator*(const DirichletChar& o) const;
  DirichletChar inverse() const;
  DirichletChar square() const { return *this * *this; }
  DirichletChar pow(std::int64_t e) const;

  /// Projection to the prime-to-ell part of the values (the part that survives
  /// reduction modulo a prime above ell).
  DirichletChar prime_to(std::uint64_t ell) const;

  friend bool operator==(const DirichletChar& a, const DirichletChar& b) {
    return a.modulus_ == b.modulus_ && a.order_ == b.order_ && a.exps_ == b.exps_;
  }
  friend bool operator<(const DirichletChar& a, const DirichletChar& b);

  nlohmann::json to_json() const;
  static DirichletChar from_json(const nlohmann::json& j);
  std::string describe() const;

 private:
  void normalize();
  std::uint64_t modulus_ = 1;
  std::uint64_t order_ = 1;
  std::vector<std::uint64_t> exps_;
};

/// Same primitive character (possibly on different moduli).
bool equivalent(const DirichletChar& a, const DirichletChar& b);

/// All characters mod N, ordered by (conductor, exponents).
std::vector<DirichletChar> all_characters(std::uint64_t modulus);

/// Character of order prime to ell together with ell; values read in the
/// residue field of a prime above ell.
struct ModLChar {
  DirichletChar chi;
  std::uint64_t ell = 0;

  nlohmann::json to_json() const;
  friend bool operator==(const ModLChar& a, const ModLChar& b) { return a.chi == b.chi && a.ell == b.ell; }
};

ModLChar reduce_mod_lambda(const DirichletChar& chi, std::uint64_t ell);

struct LocalTwist {
  DirichletChar phi;  // primitive, modulus p^c
  int c = 0;
};

/// Characters of Z_p^x of conductor exponent <= c_max with order prime to ell
/// (ell = 0: no restriction). Ordered by conductor exponent, then exponents.
std::vector<LocalTwist> enumerate_local_twists(std::uint64_t p, int c_max, std::uint64_t ell);

}  // namespace exc
