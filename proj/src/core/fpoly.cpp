#include "fpoly.hpp"

#include "errors.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace exc {

PrimeFieldPoly::PrimeFieldPoly(Coeff p, std::vector<Coeff> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  normalize();
}

PrimeFieldPoly::PrimeFieldPoly(Coeff p, const ZPoly& f) : p_(p) {
  Int pp(static_cast<unsigned long>(p));
  for (auto& c : f.coeffs()) {
    Int r;
    mpz_mod(r.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
    c_.push_back(mpz_get_ui(r.get_mpz_t()));
  }
  normalize();
}

void PrimeFieldPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PrimeFieldPoly PrimeFieldPoly::monic() const {
  if (is_zero()) return *this;
  Coeff inv = invmod(lead(), p_);
  std::vector<Coeff> v = c_;
  for (auto& c : v) c = mulmod(c, inv, p_);
  return PrimeFieldPoly(p_, std::move(v));
}

PrimeFieldPoly PrimeFieldPoly::derivative() const {
  std::vector<Coeff> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(mulmod(c_[i], i % p_, p_));
  return PrimeFieldPoly(p_, std::move(d));
}

PrimeFieldPoly::Coeff PrimeFieldPoly::eval(Coeff x) const {
  Coeff r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (mulmod(r, x, p_) + *it) % p_;
  return r;
}

ZPoly PrimeFieldPoly::lift() const {
  std::vector<Int> v;
  for (auto c : c_) v.emplace_back(static_cast<unsigned long>(c));
  return ZPoly(std::move(v));
}

PrimeFieldPoly operator+(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  std::vector<PrimeFieldPoly::Coeff> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] = (v[i] + b.c_[i]) % a.p_;
  return PrimeFieldPoly(a.p_, std::move(v));
}

PrimeFieldPoly operator-(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  std::vector<PrimeFieldPoly::Coeff> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] = (v[i] + a.p_ - b.c_[i]) % a.p_;
  return PrimeFieldPoly(a.p_, std::move(v));
}

PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  if (a.is_zero() || b.is_zero()) return PrimeFieldPoly(a.p_, std::vector<PrimeFieldPoly::Coeff>{});
  std::vector<PrimeFieldPoly::Coeff> v(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = (v[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  return PrimeFieldPoly(a.p_, std::move(v));
}

bool operator<(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.c_ < b.c_;
}

void PrimeFieldPoly::divmod(const PrimeFieldPoly& a, const PrimeFieldPoly& b, PrimeFieldPoly& q,
                            PrimeFieldPoly& r) {
  if (b.is_zero()) throw DomainError("division by zero polynomial mod p");
  const Coeff p = a.p_;
  std::vector<Coeff> rem = a.c_;
  const int db = b.degree();
  std::vector<Coeff> quo(std::max(0, a.degree() - db + 1), 0);
  const Coeff inv = invmod(b.lead(), p);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Coeff t = mulmod(rem[i], inv, p);
    quo[i - db] = t;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = (rem[i - db + j] + p - mulmod(t, b.c_[j], p)) % p;
  }
  q = PrimeFieldPoly(p, std::move(quo));
  r = PrimeFieldPoly(p, std::move(rem));
}

PrimeFieldPoly PrimeFieldPoly::operator%(const PrimeFieldPoly& m) const {
  PrimeFieldPoly q, r;
  divmod(*this, m, q, r);
  return r;
}

PrimeFieldPoly PrimeFieldPoly::operator/(const PrimeFieldPoly& m) const {
  PrimeFieldPoly q, r;
  divmod(*this, m, q, r);
  return q;
}

PrimeFieldPoly PrimeFieldPoly::gcd(PrimeFieldPoly a, PrimeFieldPoly b) {
  while (!b.is_zero()) {
    PrimeFieldPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PrimeFieldPoly PrimeFieldPoly::powmod(const PrimeFieldPoly& base, const Int& e, const PrimeFieldPoly& m) {
  PrimeFieldPoly r = one(m.p_) % m;
  PrimeFieldPoly b = base % m;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
  }
  return r;
}

namespace {

using Poly = PrimeFieldPoly;

// Squarefree factorization of a monic polynomial: pairs (squarefree, multiplicity).
std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& f) {
  const auto p = f.modulus();
  std::vector<std::pair<Poly, int>> out;
  std::function<void(const Poly&, int)> rec = [&](const Poly& g, int mult) {
    if (g.degree() < 1) return;
    Poly dg = g.derivative();
    if (dg.is_zero()) {
      // g = h(x^p): take the p-th root coefficient-wise (a^p = a in F_p).
      std::vector<PrimeFieldPoly::Coeff> v;
      for (size_t i = 0; i < g.coeffs().size(); i += p) v.push_back(g.coeffs()[i]);
      rec(Poly(p, std::move(v)), mult * static_cast<int>(p));
      return;
    }
    Poly c = Poly::gcd(g, dg);
    Poly w = g / c;
    int i = 1;
    while (!w.is_one()) {
      Poly y = Poly::gcd(w, c);
      Poly z = w / y;
      if (z.degree() > 0) out.push_back({z.monic(), i * mult});
      ++i;
      w = y;
      c = c / y;
    }
    if (c.degree() > 0) {
      std::vector<PrimeFieldPoly::Coeff> v;
      for (size_t k = 0; k < c.coeffs().size(); k += p) v.push_back(c.coeffs()[k]);
      rec(Poly(p, std::move(v)), mult * static_cast<int>(p));
    }
  };
  rec(f, 1);
  return out;
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  const auto p = f.modulus();
  std::vector<std::pair<Poly, int>> out;
  Poly h = Poly::x(p);
  const Int pp(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = Poly::powmod(h, pp, f);
    Poly g = Poly::gcd(f, h - Poly::x(p));
    if (g.degree() > 0) {
      out.push_back({g, d});
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({f.monic(), f.degree()});
  return out;
}

void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const auto p = f.modulus();
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  Int pd = 1;
  for (int i = 0; i < d; ++i) pd *= static_cast<unsigned long>(p);
  for (;;) {
    std::vector<PrimeFieldPoly::Coeff> v(f.degree());
    for (auto& c : v) c = dist(rng);
    Poly a(p, std::move(v));
    if (a.degree() < 1) continue;
    Poly t;
    if (p == 2) {
      // Trace to F_2 of the degree-d residue fields: sum_{i<d} a^(2^i).
      Poly s = a % f, acc = a % f;
      for (int i = 1; i < d; ++i) {
        s = (s * s) % f;
        acc = acc + s;
      }
      t = acc;
    } else {
      t = Poly::powmod(a, (pd - 1) / 2, f) - Poly::one(p);
    }
    Poly g = Poly::gcd(f, t);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FactorMult> factor_mod_p(const PrimeFieldPoly& f) {
  if (f.is_zero()) throw DomainError("factor_mod_p of zero polynomial");
  std::vector<FactorMult> out;
  if (f.degree() < 1) return out;
  Poly g = f.monic();
  std::uint64_t seed = std::hash<std::uint64_t>{}(g.modulus());
  for (auto c : g.coeffs()) seed = seed * 1000003u ^ std::hash<std::uint64_t>{}(c);
  std::mt19937_64 rng(seed);
  for (auto& [sf, mult] : squarefree_factorization(g)) {
    for (auto& [part, d] : distinct_degree(sf)) {
      std::vector<Poly> pieces;
      equal_degree(part, d, rng, pieces);
      for (auto& q : pieces) out.push_back({q, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FactorMult& a, const FactorMult& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  return out;
}

std::vector<int> factor_degrees(const PrimeFieldPoly& f) {
  std::vector<int> d;
  for (auto& fm : factor_mod_p(f))
    for (int i = 0; i < fm.multiplicity; ++i) d.push_back(fm.factor.degree());
  std::sort(d.begin(), d.end());
  return d;
}

bool is_irreducible(const PrimeFieldPoly& f) {
  auto fs = factor_mod_p(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace exc
