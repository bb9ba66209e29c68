#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace oracle {

Int bareiss_det(std::vector<std::vector<Int>> m) {
  const size_t n = m.size();
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

template <class T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& f) {
  // f lowest degree first
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<T> d(n);
  for (int i = 1; i <= n; ++i) d[i - 1] = f[i] * T(i);
  const int size = 2 * n - 1;
  std::vector<std::vector<T>> s(size, std::vector<T>(size, T(0)));
  for (int r = 0; r < n - 1; ++r)
    for (int i = 0; i <= n; ++i) s[r][r + i] = f[n - i];
  for (int r = 0; r < n; ++r)
    for (int i = 0; i < n; ++i) s[n - 1 + r][r + i] = d[n - 1 - i];
  return s;
}

}  // namespace

Int sylvester_discriminant(const exc::ZPoly& f) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("degree < 1");
  const Int det = bareiss_det(sylvester(f.coeffs()));
  const int sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
  return sign * det / f.lead();
}

__int128 small_discriminant(const std::vector<long>& coeffs) {
  std::vector<__int128> f(coeffs.begin(), coeffs.end());
  auto m = sylvester(f);
  const size_t n = m.size();
  __int128 prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  const int deg = static_cast<int>(coeffs.size()) - 1;
  const int s2 = (deg * (deg - 1) / 2) % 2 ? -1 : 1;
  return s2 * sign * m[n - 1][n - 1] / coeffs.back();
}

std::optional<int> numeric_real_roots(const exc::ZPoly& f) {
  using C = std::complex<long double>;
  const int n = f.degree();
  std::vector<long double> a(n + 1);
  for (int i = 0; i <= n; ++i) a[i] = f.coeff(i).get_d() / f.lead().get_d();
  auto eval = [&](C z) {
    C r = 0;
    for (int i = n; i >= 0; --i) r = r * z + a[i];
    return r;
  };
  std::vector<C> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::pow(C(0.4L, 0.9L), i);
  bool settled = false;
  for (int it = 0; it < 5000 && !settled; ++it) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      C den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      if (std::abs(den) == 0) return std::nullopt;
      const C step = eval(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    settled = delta < 1e-15L;
  }
  if (!settled) return std::nullopt;
  int real = 0;
  for (int i = 0; i < n; ++i) {
    const long double im = std::abs(z[i].imag());
    const long double scale = 1 + std::abs(z[i]);
    if (im < 1e-9L * scale) {
      ++real;
    } else if (im < 1e-5L * scale) {
      return std::nullopt;
    }
  }
  return real;
}

namespace {

using Vec = std::vector<std::int64_t>;  // lowest first, trimmed

void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// a mod b over F_p, b monic; returns remainder and writes the quotient.
Vec divide(Vec a, const Vec& b, std::int64_t p, Vec* q) {
  const int db = static_cast<int>(b.size()) - 1;
  if (q) q->assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const std::int64_t c = a[i] % p;
    if (c == 0) continue;
    if (q) (*q)[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
  }
  trim(a);
  if (q) trim(*q);
  return a;
}

}  // namespace

std::vector<int> brute_factor_degrees(const exc::ZPoly& f, std::uint64_t p) {
  const std::int64_t P = static_cast<std::int64_t>(p);
  Vec g;
  for (const auto& c : f.coeffs()) {
    Int r = c % Int(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    g.push_back(r.get_si());
  }
  trim(g);
  if (g.empty()) throw std::invalid_argument("f vanishes mod p");
  // make monic
  std::int64_t inv = 1;
  for (std::int64_t t = 1; t < P; ++t)
    if (t * g.back() % P == 1) inv = t;
  for (auto& c : g) c = c * inv % P;

  std::vector<int> degs;
  for (int d = 1; 2 * d <= static_cast<int>(g.size()) - 1; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= P;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Vec h(d + 1);
      std::int64_t r = idx;
      for (int i = 0; i < d; ++i) {
        h[i] = r % P;
        r /= P;
      }
      h[d] = 1;
      // h is irreducible when nothing smaller divided it out of g first
      for (;;) {
        Vec q;
        Vec rem = divide(g, h, P, &q);
        if (!rem.empty()) break;
        degs.push_back(d);
        g = q;
      }
    }
  }
  if (g.size() > 1) degs.push_back(static_cast<int>(g.size()) - 1);
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::map<std::uint64_t, Rat> char_table(const exc::DirichletChar& chi) {
  const std::uint64_t N = chi.modulus();
  const auto gens = chi.generators();
  // global element congruent to the generator on its own prime power and 1 elsewhere
  std::vector<std::uint64_t> lifted;
  for (const auto& g : gens) {
    std::uint64_t pk = exc::ipow(g.p, static_cast<unsigned>(g.k));
    const std::uint64_t rest = N / pk;
    const std::uint64_t gr = static_cast<std::uint64_t>((g.generator % static_cast<std::int64_t>(pk) +
                                                        static_cast<std::int64_t>(pk)) %
                                                       static_cast<std::int64_t>(pk));
    std::uint64_t x = 0;
    for (std::uint64_t t = 0; t < pk; ++t) {
      const std::uint64_t cand = 1 + rest * t;  // = 1 mod rest
      if (cand % pk == gr % pk) {
        x = cand % N;
        break;
      }
    }
    lifted.push_back(N == 1 ? 0 : x);
  }
  std::map<std::uint64_t, Rat> out;
  std::vector<std::uint64_t> k(gens.size(), 0);
  for (;;) {
    std::uint64_t a = 1 % N;
    Rat v = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
      a = exc::mulmod(a, exc::powmod(lifted[i], k[i], N), N);
      v += Rat(static_cast<long>(k[i] * chi.exponents()[i] % chi.order()), static_cast<long>(chi.order()));
    }
    v -= Rat(mpz_class(v.get_num() / v.get_den()));
    v.canonicalize();
    if (out.count(a)) throw std::logic_error("generator walk repeated an element");
    out[a] = v;
    size_t i = 0;
    while (i < gens.size() && ++k[i] == gens[i].cyclic_order) k[i++] = 0;
    if (i == gens.size()) break;
  }
  return out;
}

std::uint64_t brute_conductor(const exc::DirichletChar& chi) {
  const std::uint64_t N = chi.modulus();
  const auto table = char_table(chi);
  for (std::uint64_t d = 1; d <= N; ++d) {
    if (N % d) continue;
    bool ok = true;
    for (const auto& [a, v] : table)
      if (a % d == 1 % d && v != 0) {
        ok = false;
        break;
      }
    if (ok) return d;
  }
  return N;
}

namespace {

WeightOracle finish(std::uint64_t ell, int order, std::uint64_t period, const std::vector<std::pair<int, int>>& found,
                    const std::vector<std::uint64_t>& as) {
  WeightOracle w;
  w.pairs = found;
  for (size_t i = 0; i < found.size(); ++i) {
    w.values.insert(found[i].first);
    w.values.insert(found[i].second);
    if (order == 5) {
      // a = a0 * period / 5; the sign is + for a0 = +-1 mod 5
      const std::uint64_t a0 = as[i] * 5 / period;
      auto& half = (a0 % 5 == 1 || a0 % 5 == 4) ? w.plus : w.minus;
      half.insert(found[i].first);
      half.insert(found[i].second);
    }
  }
  (void)ell;
  return w;
}

}  // namespace

WeightOracle ordinary_weights(std::uint64_t ell, int e) {
  std::vector<std::pair<int, int>> found;
  std::vector<std::uint64_t> as;
  for (std::uint64_t a = 1; a + 1 <= ell; ++a) {
    if ((ell - 1) / std::gcd(a, ell - 1) != static_cast<std::uint64_t>(e)) continue;
    // companion: a <-> ell - 1 - a
    found.emplace_back(static_cast<int>(a + 1), static_cast<int>(ell - a));
    as.push_back(a);
  }
  return finish(ell, e, ell - 1, found, as);
}

WeightOracle supersingular_weights(std::uint64_t ell, int m) {
  std::vector<std::pair<int, int>> found;
  std::vector<std::uint64_t> as;
  for (std::uint64_t a = 1; a <= ell; ++a) {
    if ((ell + 1) / std::gcd(a, ell + 1) != static_cast<std::uint64_t>(m)) continue;
    found.emplace_back(static_cast<int>(a + 1), static_cast<int>(ell + 2 - a));
    as.push_back(a);
  }
  return finish(ell, m, ell + 1, found, as);
}

namespace {

// Z_p[sqrt d] modulo p^K
struct Quad {
  std::int64_t a, b;
};

}  // namespace

int induced_conductor(std::uint64_t p, int m, const exc::DirichletChar& phi) {
  if (p == 2) throw std::invalid_argument("odd p only");
  const int c = phi.modulus() == 1 ? 0 : exc::valuation(Int(static_cast<unsigned long>(phi.modulus())),
                                                        Int(static_cast<unsigned long>(p)));
  const int K = std::max(c, 1) + 1;
  const std::int64_t P = static_cast<std::int64_t>(p);
  const std::int64_t mod = static_cast<std::int64_t>(exc::ipow(p, static_cast<unsigned>(K)));
  auto red = [&](__int128 x) { return static_cast<std::int64_t>(((x % mod) + mod) % mod); };

  std::int64_t d = 2;
  while (exc::powmod(static_cast<std::uint64_t>(d), (p - 1) / 2, p) != p - 1) ++d;
  auto mul = [&](Quad x, Quad y) {
    return Quad{red(static_cast<__int128>(x.a) * y.a + static_cast<__int128>(d) * x.b % mod * y.b),
                red(static_cast<__int128>(x.a) * y.b + static_cast<__int128>(x.b) * y.a)};
  };
  auto norm = [&](Quad x) {
    return red(static_cast<__int128>(x.a) * x.a - static_cast<__int128>(d) * x.b % mod * x.b);
  };
  auto qpow = [&](Quad x, std::uint64_t e) {
    Quad r{1, 0};
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  };
  auto is_one_mod_p = [&](Quad x) { return x.a % P == 1 && x.b % P == 0; };

  // generator of F_{p^2}^x, searched by its order
  static std::map<std::pair<std::uint64_t, std::int64_t>, Quad> cache;
  Quad g{0, 0};
  if (auto it = cache.find({p, d}); it != cache.end()) {
    g = it->second;
  } else {
    const std::uint64_t q1 = p * p - 1;
    std::vector<std::uint64_t> qs;
    for (const auto& [r, e] : exc::factor(Int(static_cast<unsigned long>(q1)))) qs.push_back(exc::to_u64(r));
    for (std::int64_t a = 0; a < P && g.a == 0 && g.b == 0; ++a)
      for (std::int64_t b = 1; b < P; ++b) {
        Quad cand{a, b};
        bool prim = true;
        for (auto r : qs)
          if (is_one_mod_p(qpow(cand, q1 / r))) prim = false;
        if (prim) {
          g = cand;
          break;
        }
      }
    cache[{p, d}] = g;
  }

  // chi = beta * (phi o N) as a value in Q/Z; beta(g) = 1/m, beta trivial on 1 + p O_M
  auto phi_of = [&](std::int64_t n) -> Rat {
    if (phi.modulus() == 1) return 0;
    return phi.value(n % static_cast<std::int64_t>(phi.modulus()));
  };
  auto frac = [](Rat x) {
    x -= Rat(mpz_class(x.get_num() / x.get_den()));
    if (x < 0) x += 1;
    x.canonicalize();
    return x;
  };
  const Rat at_g = frac(Rat(1, m) + phi_of(norm(g)));
  // units of O_M are generated by g and the 1 + p^i {1, sqrt d}
  auto trivial_from = [&](int j) {
    for (int i = j; i < K; ++i) {
      const std::int64_t pi = static_cast<std::int64_t>(exc::ipow(p, static_cast<unsigned>(i)));
      for (Quad u : {Quad{red(1 + pi), 0}, Quad{1, pi}})
        if (frac(phi_of(norm(u))) != 0) return false;
    }
    return true;
  };
  if (at_g == 0 && trivial_from(1)) return 0;
  int cm = 1;
  while (!trivial_from(cm)) ++cm;
  // v_p(disc M) = 0 and f(M/Q_p) = 2
  return 2 * cm;
}

}  // namespace oracle
