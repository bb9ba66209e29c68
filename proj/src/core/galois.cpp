#include "galois.hpp"

#include "errors.hpp"
#include "fpoly.hpp"
#include "padic.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>

namespace exc {

std::string GlobalGroup::label() const {
  switch (kind) {
    case GroupKind::A4: return "A4";
    case GroupKind::S4: return "S4";
    case GroupKind::A5: return "A5";
    case GroupKind::Other: return "OTHER";
  }
  return "OTHER";
}

namespace {

std::vector<std::vector<Int>> companion(const ZPoly& g) {
  const int n = g.degree();
  std::vector<std::vector<Int>> c(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = 1;
  for (int j = 0; j < n; ++j) c[n - 1][j] = -g.coeff(j);
  return c;
}

std::vector<Int> integer_eigenvalues(const std::vector<std::vector<Int>>& m) {
  std::vector<Int> cp = charpoly_berkowitz(m);
  std::reverse(cp.begin(), cp.end());
  return integer_roots(ZPoly(cp));
}

// Monic integer quadratic dividing the monic g, found from integer values of
// r_i + r_j and r_i r_j (eigenvalues of C x 1 + 1 x C and C x C).
std::optional<ZPoly> quadratic_factor(const ZPoly& g) {
  const int n = g.degree();
  const auto c = companion(g);
  std::vector<std::vector<Int>> sum(n * n, std::vector<Int>(n * n, Int(0))), prod = sum;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          prod[i * n + k][j * n + l] = c[i][j] * c[k][l];
          if (k == l) sum[i * n + k][j * n + l] += c[i][j];
          if (i == j) sum[i * n + k][j * n + l] += c[k][l];
        }
  const auto sums = integer_eigenvalues(sum);
  if (sums.empty()) return std::nullopt;
  const auto prods = integer_eigenvalues(prod);
  for (const auto& s : sums)
    for (const auto& t : prods) {
      QPoly q, r;
      QPoly d(ZPoly(std::vector<Int>{t, -s, Int(1)}));
      QPoly::divmod(QPoly(g), d, q, r);
      if (r.is_zero()) return ZPoly(std::vector<Int>{t, -s, Int(1)});
    }
  return std::nullopt;
}

}  // namespace

IrreducibilityScreen screen_irreducible(const ZPoly& f) {
  IrreducibilityScreen s;
  const int n = f.degree();
  if (n < 1) {
    s.rejected = true;
    s.note = "constant polynomial";
    return s;
  }
  if (!is_squarefree(f)) {
    s.rejected = true;
    s.note = "not squarefree";
    return s;
  }
  if (n > 1 && !rational_roots(f).empty()) {
    s.rejected = true;
    s.note = "rational root";
    return s;
  }
  // possible[d]: a factor of degree d over Q is compatible with every pattern seen
  std::vector<bool> possible(n + 1, true);
  const Int bad = f.lead() * discriminant(f);
  int used = 0;
  for (std::uint64_t p = 2; used < 20; ++p) {
    if (!is_prime(p) || bad % static_cast<unsigned long>(p) == 0) continue;
    ++used;
    std::vector<bool> sums(n + 1, false);
    sums[0] = true;
    for (int d : factor_degrees(PrimeFieldPoly(p, f)))
      for (int k = n; k >= d; --k)
        if (sums[k - d]) sums[k] = true;
    for (int k = 0; k <= n; ++k) possible[k] = possible[k] && sums[k];
  }
  bool proper = false;
  for (int k = 1; k < n; ++k) proper = proper || possible[k];
  if (proper && n <= 5) {
    // Without rational roots only a quadratic factor is left to exclude.
    if (auto q = quadratic_factor(f.monic_transform())) {
      s.rejected = true;
      s.note = "quadratic factor " + q->to_string() + " of the monic transform";
      return s;
    }
    s.proven = true;
    s.note = "irreducible (no rational root, no quadratic factor)";
    return s;
  }
  if (proper) {
    s.rejected = false;
    s.proven = false;
    s.note = "irreducibility trusted (patterns modulo 20 primes do not rule out a proper factor)";
  } else {
    s.proven = true;
    s.note = "irreducible (factorization patterns modulo 20 primes)";
  }
  return s;
}

ZPoly resolvent_cubic(const ZPoly& f) {
  if (f.degree() != 4) throw DomainError("resolvent_cubic needs a quartic");
  const ZPoly g = f.monic_transform();
  const Int a = g.coeff(3), b = g.coeff(2), c = g.coeff(1), d = g.coeff(0);
  return ZPoly(std::vector<Int>{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Int(1)});
}

namespace {

// Element of the universal splitting algebra of a monic quintic: integer
// polynomial in x1..x4 with exponents bounded by (5, 4, 3, 2) after reduction.
using Exps = std::array<int, 4>;
using Elem = std::map<Exps, Int>;

class SplittingAlgebra {
 public:
  explicit SplittingAlgebra(const ZPoly& g) : a_(g.coeffs()) {
    // f_m(x_m) = sum_k a_k h_{k-m+1}(x_1..x_m)
    for (int m = 1; m <= 4; ++m) {
      Elem rel;
      for (int k = 0; k <= 5; ++k) {
        int deg = k - m + 1;
        if (deg < 0 || a_[k] == 0) continue;
        Exps e{0, 0, 0, 0};
        add_complete(rel, e, 0, m, deg, a_[k]);
      }
      Exps lead{0, 0, 0, 0};
      lead[m - 1] = 6 - m;
      rel.erase(lead);
      for (auto& [k, v] : rel) v = -v;
      tail_[m - 1] = std::move(rel);
    }
  }

  Elem var(int i) const {
    if (i < 4) {
      Exps e{0, 0, 0, 0};
      e[i] = 1;
      return Elem{{e, Int(1)}};
    }
    Elem x5{{Exps{0, 0, 0, 0}, -a_[4]}};
    for (int j = 0; j < 4; ++j) {
      Exps e{0, 0, 0, 0};
      e[j] = 1;
      x5[e] = -1;
    }
    return x5;
  }

  Elem mul(const Elem& x, const Elem& y) const {
    Elem z;
    for (const auto& [ex, cx] : x)
      for (const auto& [ey, cy] : y) {
        Exps e{ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2], ex[3] + ey[3]};
        add_term(z, e, cx * cy);
      }
    return reduce(std::move(z));
  }

  static Elem add(Elem x, const Elem& y, const Int& s = 1) {
    for (const auto& [e, c] : y) add_term(x, e, s * c);
    return x;
  }

 private:
  static void add_term(Elem& z, const Exps& e, const Int& c) {
    auto it = z.find(e);
    if (it == z.end()) {
      if (c != 0) z.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) z.erase(it);
    }
  }

  static void add_complete(Elem& rel, Exps& e, int var, int nvars, int deg, const Int& c) {
    if (var == nvars - 1) {
      e[var] = deg;
      add_term(rel, e, c);
      e[var] = 0;
      return;
    }
    for (int d = 0; d <= deg; ++d) {
      e[var] = d;
      add_complete(rel, e, var + 1, nvars, deg - d, c);
    }
    e[var] = 0;
  }

  Elem reduce(Elem z) const {
    for (int m = 4; m >= 1; --m) {
      const int bound = 6 - m;
      for (;;) {
        auto it = std::find_if(z.begin(), z.end(),
                               [&](const auto& t) { return t.first[m - 1] >= bound; });
        if (it == z.end()) break;
        Exps e = it->first;
        Int c = it->second;
        z.erase(it);
        e[m - 1] -= bound;
        for (const auto& [te, tc] : tail_[m - 1]) {
          Exps s{e[0] + te[0], e[1] + te[1], e[2] + te[2], e[3] + te[3]};
          add_term(z, s, c * tc);
        }
      }
    }
    return z;
  }

  std::vector<Int> a_;
  std::array<Elem, 4> tail_;
};

ZPoly sextic_of_monic(const ZPoly& g) {
  SplittingAlgebra alg(g);
  std::array<Elem, 5> x;
  for (int i = 0; i < 5; ++i) x[i] = alg.var(i);

  // One representative cyclic order per pentagon/pentagram pair.
  std::vector<Elem> thetas;
  std::set<std::set<std::pair<int, int>>> seen;
  std::array<int, 5> c{0, 1, 2, 3, 4};
  do {
    if (c[0] != 0) continue;
    std::set<std::pair<int, int>> edges, diag;
    for (int i = 0; i < 5; ++i) {
      edges.insert(std::minmax(c[i], c[(i + 1) % 5]));
      diag.insert(std::minmax(c[i], c[(i + 2) % 5]));
    }
    if (seen.count(edges) || seen.count(diag)) continue;
    seen.insert(edges);
    Elem d;
    for (int i = 0; i < 5; ++i) {
      d = SplittingAlgebra::add(d, alg.mul(x[c[i]], x[c[(i + 1) % 5]]));
      d = SplittingAlgebra::add(d, alg.mul(x[c[i]], x[c[(i + 2) % 5]]), -1);
    }
    thetas.push_back(alg.mul(d, d));
  } while (std::next_permutation(c.begin(), c.end()));
  if (thetas.size() != 6) throw Error(ErrorKind::Domain, "sextic resolvent: wrong orbit size");

  // prod (y - theta_i), coefficients lowest degree first
  std::vector<Elem> poly{Elem{{Exps{0, 0, 0, 0}, Int(1)}}};
  for (const auto& t : thetas) {
    std::vector<Elem> next(poly.size() + 1);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = SplittingAlgebra::add(next[i + 1], poly[i]);
      next[i] = SplittingAlgebra::add(next[i], alg.mul(poly[i], t), -1);
    }
    poly = std::move(next);
  }
  std::vector<Int> out;
  for (const auto& e : poly) {
    if (e.empty()) {
      out.push_back(0);
      continue;
    }
    if (e.size() != 1 || e.begin()->first != Exps{0, 0, 0, 0})
      throw Error(ErrorKind::Domain, "sextic resolvent coefficient is not symmetric");
    out.push_back(e.begin()->second);
  }
  return ZPoly(out);
}

// Characteristic polynomial of x^2 + k x in Q[x]/(g), g monic.
ZPoly tschirnhaus(const ZPoly& g, long k) {
  const int n = g.degree();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) {
    // x^i * (x^2 + k x) reduced modulo g
    std::vector<Int> v(n + 2, Int(0));
    v[i + 2] += 1;
    v[i + 1] += k;
    for (int d = n + 1; d >= n; --d) {
      if (v[d] == 0) continue;
      Int t = v[d];
      for (int j = 0; j < n; ++j) v[d - n + j] -= t * g.coeff(j);
      v[d] = 0;
    }
    for (int j = 0; j < n; ++j) m[i][j] = v[j];
  }
  std::vector<Int> cp = charpoly_berkowitz(m);
  std::reverse(cp.begin(), cp.end());
  return ZPoly(cp);
}

}  // namespace

ZPoly sextic_resolvent(const ZPoly& f) {
  if (f.degree() != 5) throw DomainError("sextic_resolvent needs a quintic");
  return sextic_of_monic(f.monic_transform());
}

GlobalGroup galois_group(const ZPoly& f) {
  const int n = f.degree();
  if (n != 4 && n != 5)
    throw DomainError("galois_group supports degree 4 and 5 only (degree " + std::to_string(n) + ")");
  const auto screen = screen_irreducible(f);
  if (screen.rejected) return {GroupKind::Other, "reducible input (" + screen.note + ")"};
  const ZPoly g = f.monic_transform();
  const bool square = is_square(discriminant(g));
  if (n == 4) {
    const auto roots = rational_roots(resolvent_cubic(g));
    if (roots.empty()) return {square ? GroupKind::A4 : GroupKind::S4, ""};
    if (roots.size() == 3) return {GroupKind::Other, "V4 (resolvent cubic splits)"};
    return {GroupKind::Other, "dihedral or cyclic (resolvent cubic has one rational root)"};
  }
  ZPoly h = g;
  ZPoly sextic = sextic_of_monic(h);
  for (long k = 1; !is_squarefree(sextic); ++k) {
    if (k > 50) throw Error(ErrorKind::Domain, "no squarefree sextic resolvent found");
    h = tschirnhaus(g, k);
    if (!is_squarefree(h)) continue;
    sextic = sextic_of_monic(h);
  }
  const bool solvable = !integer_roots(sextic).empty();
  if (solvable) return {GroupKind::Other, "solvable (sextic resolvent has a rational root)"};
  if (square) return {GroupKind::A5, ""};
  return {GroupKind::Other, "S5"};
}

bool is_non_real(const ZPoly& f) { return sturm_real_roots(f) < f.degree(); }

}  // namespace exc
