#pragma once

#include "arith.hpp"

#include <string>
#include <vector>

namespace exc {

/// Univariate polynomial over Z, coefficients lowest degree first.
/// The zero polynomial has no coefficients.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Int> coeffs);
  ZPoly(std::initializer_list<long> coeffs);

  static ZPoly monomial(const Int& c, int degree);
  /// Parses a JSON integer array such as "[3, 11, -7, -1, 1]".
  static ZPoly parse(const std::string& text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Int(0); }
  const Int& lead() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Int content() const;
  ZPoly derivative() const;
  Rat eval(const Rat& x) const;
  Int eval(const Int& x) const;
  /// f(x + shift)
  ZPoly shift(const Int& shift) const;
  /// f(-x)
  ZPoly negate_var() const;
  /// lead^(n-1) * f(x / lead): monic, with roots scaled by the leading coefficient.
  ZPoly monic_transform() const;

  std::string to_json() const;
  std::string to_string() const;

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const Int& s, const ZPoly& a);
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

 private:
  void normalize();
  std::vector<Int> c_;
};

/// Univariate polynomial over Q used for exact Euclidean computations.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  explicit QPoly(const ZPoly& f);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& lead() const { return c_.back(); }
  Rat eval(const Rat& x) const;
  QPoly derivative() const;
  QPoly monic() const;
  /// Clears denominators and content, with positive leading coefficient.
  ZPoly primitive_part() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rat& s, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
  static QPoly gcd(QPoly a, QPoly b);

 private:
  void normalize();
  std::vector<Rat> c_;
};

Int resultant(const ZPoly& f, const ZPoly& g);
/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
Int discriminant(const ZPoly& f);
bool is_squarefree(const ZPoly& f);
/// Squarefree part f / gcd(f, f'), primitive with positive leading coefficient.
ZPoly squarefree_part(const ZPoly& f);

/// Number of distinct real roots of a squarefree polynomial.
int sturm_real_roots(const ZPoly& f);
/// Number of roots in the half-open interval (a, b]; f squarefree,
/// f(a) != 0 and f(b) != 0.
int sturm_count(const ZPoly& f, const Rat& a, const Rat& b);
/// Integer roots of a nonzero polynomial, ascending.
std::vector<Int> integer_roots(const ZPoly& f);
/// Rational roots of a nonzero polynomial, ascending.
std::vector<Rat> rational_roots(const ZPoly& f);

}  // namespace exc
