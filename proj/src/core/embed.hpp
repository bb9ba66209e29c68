#pragma once

#include "arith.hpp"
#include "fpoly.hpp"

#include "json.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace exc {

/// F_{ell^m} = F_ell[t]/(modulus), modulus the lexicographically smallest
/// monic irreducible of degree m.
class GaloisField {
 public:
  using Elem = PrimeFieldPoly;

  GaloisField(std::uint64_t ell, int m);

  std::uint64_t characteristic() const { return ell_; }
  int degree() const { return m_; }
  std::uint64_t size() const { return q_; }
  const PrimeFieldPoly& modulus() const { return mod_; }

  Elem zero() const { return PrimeFieldPoly(ell_, std::vector<std::uint64_t>{}); }
  Elem one() const { return PrimeFieldPoly::one(ell_); }
  Elem from_int(std::int64_t a) const;
  /// Element whose coefficient vector is the base-ell digits of i.
  Elem from_index(std::uint64_t i) const;
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % mod_; }
  Elem pow(const Elem& a, std::uint64_t e) const;
  Elem inv(const Elem& a) const;
  /// Smallest (by index) generator of the multiplicative group.
  Elem primitive_element() const;
  std::string str(const Elem& a) const;

 private:
  std::uint64_t ell_;
  int m_;
  std::uint64_t q_;
  PrimeFieldPoly mod_;
};

/// Z[zeta_5] with basis 1, z, z^2, z^3.
struct Cyclotomic5 {
  std::array<Int, 4> c{};
  static Cyclotomic5 from_int(long a);
  static Cyclotomic5 zeta_pow(int k);
  friend Cyclotomic5 operator+(const Cyclotomic5& a, const Cyclotomic5& b);
  friend Cyclotomic5 operator-(const Cyclotomic5& a, const Cyclotomic5& b);
  friend Cyclotomic5 operator*(const Cyclotomic5& a, const Cyclotomic5& b);
  friend bool operator==(const Cyclotomic5& a, const Cyclotomic5& b) { return a.c == b.c; }
  bool is_zero() const;
  std::string str() const;
};

template <typename E>
struct Mat2 {
  std::array<E, 4> e;  // row-major a b / c d
};

using GFMat = Mat2<GaloisField::Elem>;
using CycMat = Mat2<Cyclotomic5>;

/// The pair (x, y) with omega = eps + 1/eps, c = eps^2 - 1/eps^2,
///   x = [[-c, omega], [omega, c]],  y = [[eps^2, -omega], [0, eps^-2]],
/// eps a primitive 5th root of unity raised to epsilon_power (eps = 1 when ell = 5).
std::pair<GFMat, GFMat> build_embedding(const GaloisField& F, int epsilon_power);
std::pair<CycMat, CycMat> build_embedding_cyclotomic(int epsilon_power);

GFMat mat_mul(const GaloisField& F, const GFMat& a, const GFMat& b);
GFMat mat_identity(const GaloisField& F);

/// x^2, y^5 and (xy)^3 all scalar.
bool verify_presentation(const GaloisField& F, const GFMat& x, const GFMat& y);
bool verify_presentation(const CycMat& x, const CycMat& y);

/// Order of <x, y> in PGL_2 by closure; DomainError above cap.
std::uint64_t generated_group_order(const GaloisField& F, const GFMat& x, const GFMat& y, std::uint64_t cap = 10000);

/// tr^2/det of a fixed list of words in x, y (projective invariants).
std::vector<std::string> trace_fingerprint(const GaloisField& F, const GFMat& x, const GFMat& y);

/// Full check as reported by the command line tool. m = 0 selects the smallest
/// m with 5 | ell^m - 1 (or m = 1 for ell = 5).
nlohmann::json embed_check(std::uint64_t ell, int m);
nlohmann::json embed_check_cyclotomic();

}  // namespace exc
