#include "padic.hpp"

#include "errors.hpp"
#include "fpoly.hpp"
#include "linalg.hpp"

#include <algorithm>

namespace exc {

using linalg::FMat;
using linalg::FVec;
using linalg::QMat;
using linalg::ZMat;

namespace {

using Vec = std::vector<Int>;

Int reduce(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Product in Q[x]/(g), g monic of degree n.
std::vector<Rat> mul_power_basis(const std::vector<Rat>& a, const std::vector<Rat>& b,
                                 const ZPoly& g) {
  const int n = g.degree();
  std::vector<Rat> c(2 * n - 1, Rat(0));
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) c[i + j] += a[i] * b[j];
  }
  for (int d = 2 * n - 2; d >= n; --d) {
    if (c[d] == 0) continue;
    Rat t = c[d];
    for (int i = 0; i < n; ++i) c[d - n + i] -= t * Rat(g.coeff(i));
    c[d] = 0;
  }
  c.resize(n);
  return c;
}

Vec to_integral(const std::vector<Rat>& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) throw Error(ErrorKind::Domain, "order is not closed under multiplication");
    out[i] = v[i].get_num();
  }
  return out;
}

// An order of Q[x]/(g) given by a basis in power-basis coordinates, with
// integral structure constants.
struct Order {
  int n;
  QMat basis;
  QMat inv;
  std::vector<std::vector<Vec>> table;  // table[i][j] = b_i * b_j in basis coordinates

  Order(const ZPoly& g, QMat b) : n(g.degree()), basis(std::move(b)) {
    inv = linalg::inverse(basis);
    table.assign(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        table[i][j] = to_integral(linalg::row_times(mul_power_basis(basis[i], basis[j], g), inv));
        table[j][i] = table[i][j];
      }
  }

  Vec mul(const Vec& x, const Vec& y, const Int& mod) const {
    Vec z(n, Int(0));
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        Int s = x[i] * y[j];
        for (int k = 0; k < n; ++k) z[k] += s * table[i][j][k];
      }
    }
    for (auto& c : z) c = reduce(c, mod);
    return z;
  }

  Vec one() const {
    Vec e(n, Int(0));
    std::vector<Rat> u(n, Rat(0));
    u[0] = 1;
    return to_integral(linalg::row_times(u, inv));
  }

  Vec pow(Vec x, Int e, const Int& mod) const {
    Vec r = one();
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mul(r, x, mod);
      e >>= 1;
      if (e > 0) x = mul(x, x, mod);
    }
    return r;
  }

  Vec unit(int i) const {
    Vec v(n, Int(0));
    v[i] = 1;
    return v;
  }
};

FVec to_fvec(const Vec& v, std::uint64_t p) {
  FVec out(v.size());
  Int P(static_cast<unsigned long>(p));
  for (size_t i = 0; i < v.size(); ++i) out[i] = to_u64(reduce(v[i], P));
  return out;
}

Vec to_vec(const FVec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Int(static_cast<unsigned long>(v[i]));
  return out;
}

// Matrix of x -> x^(p^j) on O/pO.
FMat frobenius_matrix(const Order& o, std::uint64_t p, int j) {
  Int P(static_cast<unsigned long>(p));
  Int e = 1;
  for (int i = 0; i < j; ++i) e *= P;
  FMat m;
  for (int i = 0; i < o.n; ++i) m.push_back(to_fvec(o.pow(o.unit(i), e, P), p));
  return m;
}

// Basis (O coordinates) of the lattice generated by p*O and the given lifts.
ZMat lattice_with_p(const std::vector<FVec>& lifts, std::uint64_t p, int n) {
  ZMat gens;
  for (int i = 0; i < n; ++i) {
    Vec v(n, Int(0));
    v[i] = Int(static_cast<unsigned long>(p));
    gens.push_back(v);
  }
  for (const auto& l : lifts) gens.push_back(to_vec(l));
  return linalg::hnf_basis(gens, n);
}

QMat to_qmat(const ZMat& z) {
  QMat q(z.size());
  for (size_t i = 0; i < z.size(); ++i)
    for (const auto& c : z[i]) q[i].push_back(Rat(c));
  return q;
}

int radical_exponent(std::uint64_t p, int n) {
  int j = 1;
  Int q(static_cast<unsigned long>(p));
  while (q < n) {
    q *= static_cast<unsigned long>(p);
    ++j;
  }
  return j;
}

// One Round 2 step: returns true and replaces the basis when O is enlarged.
bool enlarge(const ZPoly& g, QMat& basis, std::uint64_t p) {
  Order o(g, basis);
  const int n = o.n;
  Int P(static_cast<unsigned long>(p));
  auto radical = linalg::left_kernel(frobenius_matrix(o, p, radical_exponent(p, n)), p);
  if (radical.empty()) return false;
  ZMat h = lattice_with_p(radical, p, n);
  QMat hinv = linalg::inverse(to_qmat(h));
  // rows: b_i; columns: coordinates of b_i * w_j in the basis w of I_p, mod p
  FMat m(n, FVec(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec prod(n, Int(0));
      for (int t = 0; t < n; ++t)
        if (h[j][t] != 0)
          for (int k = 0; k < n; ++k) prod[k] += h[j][t] * o.table[i][t][k];
      std::vector<Rat> pr(prod.begin(), prod.end());
      FVec c = to_fvec(to_integral(linalg::row_times(pr, hinv)), p);
      for (int k = 0; k < n; ++k) m[i][j * n + k] = c[k];
    }
  auto ker = linalg::left_kernel(m, p);
  if (ker.empty()) return false;
  ZMat u = lattice_with_p(ker, p, n);
  QMat nb = linalg::mul(to_qmat(u), basis);
  Rat inv_p(1, P);
  for (auto& row : nb)
    for (auto& c : row) c *= inv_p;
  basis = std::move(nb);
  return true;
}

// Splits the identity of the commutative F_p-algebra O/pO into primitive
// idempotents using its Frobenius-fixed subalgebra.
std::vector<Vec> primitive_idempotents(const Order& o, std::uint64_t p) {
  const int n = o.n;
  Int P(static_cast<unsigned long>(p));
  FMat fr = frobenius_matrix(o, p, 1);
  for (int i = 0; i < n; ++i) fr[i][i] = (fr[i][i] + p - 1) % p;
  auto fixed = linalg::left_kernel(fr, p);
  std::vector<Vec> idem{o.one()};
  for (const auto& yv : fixed) {
    if (idem.size() == fixed.size()) break;
    Vec y = to_vec(yv);
    // eigenvalues of y in F_p: the linear factors of its characteristic polynomial
    std::vector<std::vector<Int>> my;
    for (int i = 0; i < n; ++i) my.push_back(o.mul(o.unit(i), y, P));
    auto cp = charpoly_berkowitz(my);
    std::reverse(cp.begin(), cp.end());
    std::vector<std::uint64_t> eigen{0};
    for (const auto& fm : factor_mod_p(PrimeFieldPoly(p, ZPoly(cp))))
      if (fm.factor.degree() == 1) eigen.push_back((p - fm.factor.monic().coeffs()[0]) % p);
    std::sort(eigen.begin(), eigen.end());
    eigen.erase(std::unique(eigen.begin(), eigen.end()), eigen.end());
    std::vector<Vec> next;
    for (const auto& eps : idem) {
      // y*eps has eigenvalues in F_p; collect the nonzero eps * (1 - (y - c)^(p-1)).
      Vec ye = o.mul(y, eps, P);
      std::vector<Vec> parts;
      Vec acc(n, Int(0));
      for (std::uint64_t c : eigen) {
        if (acc == eps) break;
        Vec z = ye;
        for (int k = 0; k < n; ++k) z[k] = reduce(z[k] - Int(static_cast<unsigned long>(c)) * eps[k], P);
        Vec w = o.pow(z, Int(static_cast<unsigned long>(p - 1)), P);
        w = o.mul(w, eps, P);
        Vec part(n);
        for (int k = 0; k < n; ++k) part[k] = reduce(eps[k] - w[k], P);
        if (std::all_of(part.begin(), part.end(), [](const Int& x) { return x == 0; })) continue;
        for (int k = 0; k < n; ++k) acc[k] = reduce(acc[k] + part[k], P);
        parts.push_back(part);
      }
      for (auto& q : parts) next.push_back(std::move(q));
    }
    idem = std::move(next);
  }
  if (idem.size() != fixed.size()) throw Error(ErrorKind::Domain, "idempotent splitting failed");
  return idem;
}

int rank_of_products(const Order& o, const std::vector<Vec>& span, const Vec& eps, std::uint64_t p) {
  Int P(static_cast<unsigned long>(p));
  FMat m;
  for (const auto& s : span) m.push_back(to_fvec(o.mul(s, eps, P), p));
  if (m.empty()) return 0;
  return linalg::rank_mod_p(m, p);
}

Vec lift_idempotent(const Order& o, Vec e, const Int& mod) {
  for (int guard = 0; guard < 64; ++guard) {
    Vec e2 = o.mul(e, e, mod);
    if (e2 == e) return e;
    Vec e3 = o.mul(e2, e, mod);
    for (int k = 0; k < o.n; ++k) e[k] = reduce(3 * e2[k] - 2 * e3[k], mod);
  }
  throw Error(ErrorKind::Precision, "idempotent lifting did not converge");
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Int& mod) {
  std::vector<Int> c = (a * b).coeffs();
  for (auto& x : c) x = reduce(x, mod);
  return ZPoly(c);
}

}  // namespace

std::vector<Int> charpoly_berkowitz(const std::vector<std::vector<Int>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return {Int(1)};
  // Toeplitz transforms from the leading principal minors.
  std::vector<std::vector<std::vector<Int>>> transforms;
  std::vector<std::vector<Int>> a = m;
  while (a.size() > 1) {
    const int sz = static_cast<int>(a.size());
    std::vector<Int> r(a[0].begin() + 1, a[0].end());
    std::vector<Int> c;
    for (int i = 1; i < sz; ++i) c.push_back(a[i][0]);
    Int a00 = a[0][0];
    std::vector<std::vector<Int>> sub(sz - 1, std::vector<Int>(sz - 1));
    for (int i = 1; i < sz; ++i)
      for (int j = 1; j < sz; ++j) sub[i - 1][j - 1] = a[i][j];
    std::vector<Int> items{Int(1), -a00};
    std::vector<Int> v = c;
    for (int k = 0; k < sz - 1; ++k) {
      Int s = 0;
      for (int i = 0; i < sz - 1; ++i) s += r[i] * v[i];
      items.push_back(-s);
      std::vector<Int> w(sz - 1, Int(0));
      for (int i = 0; i < sz - 1; ++i)
        for (int j = 0; j < sz - 1; ++j) w[i] += sub[i][j] * v[j];
      v = std::move(w);
    }
    std::vector<std::vector<Int>> t(sz + 1, std::vector<Int>(sz, Int(0)));
    for (int j = 0; j < sz; ++j)
      for (int i = j; i <= sz; ++i) t[i][j] = items[i - j];
    transforms.push_back(std::move(t));
    a = std::move(sub);
  }
  std::vector<Int> poly{Int(1), -a[0][0]};
  for (auto it = transforms.rbegin(); it != transforms.rend(); ++it) {
    std::vector<Int> next(it->size(), Int(0));
    for (size_t i = 0; i < it->size(); ++i)
      for (size_t j = 0; j < poly.size(); ++j) next[i] += (*it)[i][j] * poly[j];
    poly = std::move(next);
  }
  return poly;
}

bool dedekind_p_maximal(const ZPoly& g, std::uint64_t p) {
  PrimeFieldPoly gb(p, g);
  PrimeFieldPoly rad = PrimeFieldPoly::one(p), rest = PrimeFieldPoly::one(p);
  for (const auto& fm : factor_mod_p(gb)) {
    rad = rad * fm.factor;
    for (int i = 1; i < fm.multiplicity; ++i) rest = rest * fm.factor;
  }
  ZPoly diff = rad.lift() * rest.lift() - g;
  std::vector<Int> q = diff.coeffs();
  Int P(static_cast<unsigned long>(p));
  for (auto& c : q) c /= P;
  PrimeFieldPoly fb(p, ZPoly(q));
  PrimeFieldPoly d = PrimeFieldPoly::gcd(PrimeFieldPoly::gcd(fb, rad), rest);
  return d.degree() == 0;
}

PAdicFactorization padic_splitting(const ZPoly& f, std::uint64_t p, int max_precision) {
  if (f.degree() < 1) throw DomainError("padic_splitting needs a nonconstant polynomial");
  if (!is_prime(p)) throw DomainError("modulus is not prime");
  if (max_precision < 1) throw DomainError("max_precision must be positive");
  const ZPoly g = f.monic_transform();
  const int n = g.degree();
  const Int P(static_cast<unsigned long>(p));
  const Int disc = discriminant(g);
  if (disc == 0) throw DomainError("polynomial is not squarefree");

  PAdicFactorization out;
  out.p = p;
  const int vdisc = valuation(disc, P);
  QMat basis = linalg::identity(n);
  out.dedekind_maximal = vdisc < 2 || dedekind_p_maximal(g, p);
  if (!out.dedekind_maximal)
    while (enlarge(g, basis, p)) {
    }
  const Order o(g, basis);
  // [O : Z[theta]] = 1 / det(basis)
  out.index_valuation = -valuation(linalg::det(basis), P);
  out.disc_valuation = vdisc - 2 * out.index_valuation;

  auto radical = linalg::left_kernel(frobenius_matrix(o, p, radical_exponent(p, n)), p);
  std::vector<Vec> radical_span;
  for (const auto& r : radical) radical_span.push_back(to_vec(r));
  std::vector<Vec> full_span;
  for (int i = 0; i < n; ++i) full_span.push_back(o.unit(i));

  struct Part {
    Vec idem;
    int e, f;
  };
  std::vector<Part> parts;
  for (auto& eps : primitive_idempotents(o, p)) {
    int d = rank_of_products(o, full_span, eps, p);
    int fdeg = d - rank_of_products(o, radical_span, eps, p);
    if (fdeg <= 0 || d % fdeg) throw Error(ErrorKind::Domain, "inconsistent local algebra");
    parts.push_back({eps, d / fdeg, fdeg});
  }

  std::vector<Rat> theta_pow(n, Rat(0));
  if (n > 1) theta_pow[1] = 1;
  else theta_pow[0] = -Rat(g.coeff(0));
  const Vec theta = to_integral(linalg::row_times(theta_pow, o.inv));

  int k = std::min(2 * vdisc + 4, max_precision);
  for (;;) {
    Int mod;
    mpz_pow_ui(mod.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(k));
    bool ok = true;
    std::vector<PAdicFactor> factors;
    ZPoly prod = ZPoly({1});
    for (const auto& part : parts) {
      Vec eps = lift_idempotent(o, part.idem, mod);
      Vec z = o.mul(theta, eps, mod);
      std::vector<std::vector<Int>> m;
      for (int i = 0; i < n; ++i) m.push_back(o.mul(o.unit(i), z, mod));
      std::vector<Int> cp = charpoly_berkowitz(m);
      const int d = part.e * part.f;
      for (int i = d + 1; i <= n; ++i)
        if (reduce(cp[i], mod) != 0) ok = false;
      std::vector<Int> coeffs(d + 1);
      for (int i = 0; i <= d; ++i) coeffs[d - i] = reduce(cp[i], mod);
      ZPoly approx(coeffs);
      if (d > 1 && 2 * valuation(discriminant(approx), P) >= k) ok = false;
      prod = mul_mod(prod, approx, mod);
      factors.push_back({approx, part.e, part.f});
    }
    std::vector<Int> gc = g.coeffs();
    for (auto& c : gc) c = reduce(c, mod);
    if (ok && prod == ZPoly(gc)) {
      std::sort(factors.begin(), factors.end(), [](const PAdicFactor& a, const PAdicFactor& b) {
        if (a.e * a.f != b.e * b.f) return a.e * a.f < b.e * b.f;
        if (a.e != b.e) return a.e < b.e;
        return a.approximant.coeffs() < b.approximant.coeffs();
      });
      out.factors = std::move(factors);
      out.precision = k;
      return out;
    }
    if (k >= max_precision)
      throw PrecisionError("p-adic factors not certified within precision p^" +
                           std::to_string(max_precision));
    k = std::min(2 * k, max_precision);
  }
}

}  // namespace exc
