#pragma once

#include "poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace exc {

/// Polynomial over the prime field F_p, coefficients in [0, p), lowest first.
class PrimeFieldPoly {
 public:
  using Coeff = std::uint64_t;

  PrimeFieldPoly() = default;
  PrimeFieldPoly(Coeff p, std::vector<Coeff> coeffs);
  PrimeFieldPoly(Coeff p, const ZPoly& f);

  static PrimeFieldPoly one(Coeff p) { return PrimeFieldPoly(p, std::vector<Coeff>{1}); }
  static PrimeFieldPoly x(Coeff p) { return PrimeFieldPoly(p, std::vector<Coeff>{0, 1}); }

  Coeff modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff>& coeffs() const { return c_; }
  Coeff lead() const { return c_.back(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  PrimeFieldPoly monic() const;
  PrimeFieldPoly derivative() const;
  Coeff eval(Coeff x) const;
  ZPoly lift() const;

  friend PrimeFieldPoly operator+(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend PrimeFieldPoly operator-(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend bool operator==(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }
  friend bool operator<(const PrimeFieldPoly& a, const PrimeFieldPoly& b);

  static void divmod(const PrimeFieldPoly& a, const PrimeFieldPoly& b, PrimeFieldPoly& q,
                     PrimeFieldPoly& r);
  PrimeFieldPoly operator%(const PrimeFieldPoly& m) const;
  PrimeFieldPoly operator/(const PrimeFieldPoly& m) const;
  static PrimeFieldPoly gcd(PrimeFieldPoly a, PrimeFieldPoly b);
  /// base^e mod m
  static PrimeFieldPoly powmod(const PrimeFieldPoly& base, const Int& e, const PrimeFieldPoly& m);

 private:
  void normalize();
  Coeff p_ = 2;
  std::vector<Coeff> c_;
};

struct FactorMult {
  PrimeFieldPoly factor;
  int multiplicity;
};

/// Complete factorization into monic irreducibles, sorted by degree then by
/// coefficient sequence. Equal-degree splitting draws from a pseudo-random
/// stream seeded by (p, coefficients), so the run is reproducible.
std::vector<FactorMult> factor_mod_p(const PrimeFieldPoly& f);

/// Degrees of the irreducible factors (with multiplicity), ascending.
std::vector<int> factor_degrees(const PrimeFieldPoly& f);

bool is_irreducible(const PrimeFieldPoly& f);

}  // namespace exc
