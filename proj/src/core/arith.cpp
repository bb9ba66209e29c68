#include "arith.hpp"

#include "errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace exc {

int valuation(const Int& n, const Int& p) {
  if (n == 0) throw DomainError("valuation of zero");
  Int m = abs(n);
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(const Rat& q, const Int& p) {
  return valuation(Int(q.get_num()), p) - valuation(Int(q.get_den()), p);
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::uint64_t n) {
  Int m;
  mpz_set_ui(m.get_mpz_t(), n);
  return is_prime(m);
}

Int isqrt(const Int& n) {
  if (n < 0) throw DomainError("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

namespace {

Int pollard_brent(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 128;
    auto f = [&](const Int& v) {
      Int t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        Int d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Int n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factor(const Int& n) {
  if (n == 0) throw DomainError("factor of zero");
  Int m = abs(n);
  std::map<Int, int> out;
  for (unsigned long p = 2; p < 10000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[Int(p)];
      m /= p;
    }
  }
  factor_into(m, out);
  return {out.begin(), out.end()};
}

std::vector<Int> prime_support(const Int& n) {
  std::vector<Int> ps;
  for (auto& [p, e] : factor(n)) ps.push_back(p);
  return ps;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<bool> sieve(bound, true);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < bound; j += i) sieve[j] = false;
  }
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  Int r, aa, mm;
  mpz_set_ui(aa.get_mpz_t(), a);
  mpz_set_ui(mm.get_mpz_t(), m);
  if (!mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()))
    throw DomainError("not invertible modulo " + std::to_string(m));
  return mpz_get_ui(r.get_mpz_t());
}

std::int64_t to_i64(const Int& n) {
  if (!mpz_fits_slong_p(n.get_mpz_t())) throw DomainError("integer too large: " + n.get_str());
  return mpz_get_si(n.get_mpz_t());
}

std::uint64_t to_u64(const Int& n) {
  if (n < 0 || !mpz_fits_ulong_p(n.get_mpz_t())) throw DomainError("integer out of range: " + n.get_str());
  return mpz_get_ui(n.get_mpz_t());
}

std::uint64_t canonical_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::uint64_t phi = p - 1;
  std::vector<std::uint64_t> qs;
  for (auto& [q, e] : factor(Int(static_cast<unsigned long>(phi)))) qs.push_back(to_u64(q));
  const std::uint64_t p2 = p * p;
  for (std::uint64_t g = 2;; ++g) {
    bool prim = std::all_of(qs.begin(), qs.end(),
                            [&](std::uint64_t q) { return powmod(g, phi / q, p) != 1; });
    if (prim && powmod(g, phi, p2) != 1) return g;
  }
}

std::uint64_t discrete_log(std::uint64_t a, std::uint64_t g, std::uint64_t n, std::uint64_t m) {
  a %= m;
  std::uint64_t x = 0, mod = 1;
  for (auto& [qq, e] : factor(Int(static_cast<unsigned long>(n)))) {
    const std::uint64_t q = to_u64(qq);
    const std::uint64_t qe = ipow(q, static_cast<unsigned>(e));
    // gamma generates the subgroup of order q
    const std::uint64_t gamma = powmod(g, n / q, m);
    const std::uint64_t h = powmod(a, n / qe, m);
    const std::uint64_t gq = powmod(g, n / qe, m);
    const std::uint64_t gq_inv = invmod(gq, m);
    std::uint64_t xk = 0, qk = 1;
    for (int k = 0; k < e; ++k) {
      // strip the digits found so far, then project to order q
      std::uint64_t t = mulmod(h, powmod(gq_inv, xk, m), m);
      t = powmod(t, qe / (qk * q), m);
      std::uint64_t d = 0, cur = 1;
      while (cur != t) {
        cur = mulmod(cur, gamma, m);
        if (++d >= q) throw DomainError("discrete log does not exist");
      }
      xk += d * qk;
      qk *= q;
    }
    // combine x mod `mod` with xk mod qe
    std::uint64_t t = (xk + qe - x % qe) % qe;
    t = mulmod(t, invmod(mod % qe, qe), qe);
    x += mod * t;
    mod *= qe;
  }
  if (powmod(g, x, m) != a) throw DomainError("discrete log does not exist");
  return x;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace exc
