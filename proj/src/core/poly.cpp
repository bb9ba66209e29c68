#include "poly.hpp"

#include "errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace exc {

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  normalize();
}

void ZPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::monomial(const Int& c, int degree) {
  std::vector<Int> v(degree + 1, Int(0));
  v[degree] = c;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("polynomial is not a JSON array: " + text);
  }
  if (!j.is_array()) throw FormatError("polynomial is not a JSON array: " + text);
  std::vector<Int> c;
  for (auto& e : j) {
    if (e.is_number_integer()) {
      c.emplace_back(e.dump());
    } else if (e.is_string()) {
      Int v;
      if (v.set_str(e.get<std::string>(), 10) != 0)
        throw FormatError("bad integer coefficient: " + e.dump());
      c.push_back(v);
    } else {
      throw FormatError("bad coefficient: " + e.dump());
    }
  }
  return ZPoly(std::move(c));
}

Int ZPoly::content() const {
  Int g = 0;
  for (auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly ZPoly::derivative() const {
  std::vector<Int> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return ZPoly(std::move(d));
}

Rat ZPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rat(*it);
  return r;
}

Int ZPoly::eval(const Int& x) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

ZPoly ZPoly::shift(const Int& s) const {
  // Horner in the ring Z[x]: ((a_n)(x+s) + a_{n-1})(x+s) + ...
  ZPoly r;
  ZPoly lin({0, 1});
  lin = lin + ZPoly(std::vector<Int>{s});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + ZPoly(std::vector<Int>{*it});
  return r;
}

ZPoly ZPoly::negate_var() const {
  std::vector<Int> v = c_;
  for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return ZPoly(std::move(v));
}

ZPoly ZPoly::monic_transform() const {
  if (is_zero()) throw DomainError("monic transform of zero polynomial");
  const int n = degree();
  std::vector<Int> v(n + 1);
  Int pw = 1;
  for (int i = n; i >= 0; --i) {
    // coefficient of x^i is a_i * lead^(n-1-i); lead's own coefficient is 1.
    if (i == n) {
      v[i] = 1;
      continue;
    }
    v[i] = c_[i] * pw;
    pw *= lead();
  }
  return ZPoly(std::move(v));
}

std::string ZPoly::to_json() const {
  std::string s = "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].get_str();
  }
  return s + "]";
}

std::string ZPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    Int a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + Int(-1) * b; }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return ZPoly(std::move(v));
}

ZPoly operator*(const Int& s, const ZPoly& a) {
  std::vector<Int> v = a.c_;
  for (auto& c : v) c *= s;
  return ZPoly(std::move(v));
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(const ZPoly& f) {
  for (auto& c : f.coeffs()) c_.emplace_back(c);
  normalize();
}

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat QPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

QPoly QPoly::derivative() const {
  std::vector<Rat> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return Rat(1) / lead() * *this;
}

ZPoly QPoly::primitive_part() const {
  if (is_zero()) return {};
  Int den = 1;
  for (auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> v;
  for (auto& c : c_) v.push_back(Int(c * Rat(den)));
  ZPoly z(std::move(v));
  Int g = z.content();
  if (z.lead() < 0) g = -g;
  std::vector<Int> w = z.coeffs();
  for (auto& c : w) c /= g;
  return ZPoly(std::move(w));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + Rat(-1) * b; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(v));
}

QPoly operator*(const Rat& s, const QPoly& a) {
  std::vector<Rat> v = a.c_;
  for (auto& c : v) c *= s;
  return QPoly(std::move(v));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rat> rem = a.c_;
  const int db = b.degree();
  std::vector<Rat> quo(std::max(0, a.degree() - db + 1), Rat(0));
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rat t = rem[i] / b.lead();
    quo[i - db] = t;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= t * b.c_[j];
  }
  q = QPoly(std::move(quo));
  r = QPoly(std::move(rem));
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ------------------------------------------------------- resultants etc.

namespace {

Rat resultant_q(QPoly f, QPoly g) {
  Rat sign = 1, acc = 1;
  for (;;) {
    if (f.is_zero() || g.is_zero()) return 0;
    const int df = f.degree(), dg = g.degree();
    if (dg == 0) {
      Rat p = 1;
      for (int i = 0; i < df; ++i) p *= g.lead();
      return sign * acc * p;
    }
    if (df < dg) {
      if ((df * dg) % 2) sign = -sign;
      std::swap(f, g);
      continue;
    }
    QPoly q, r;
    QPoly::divmod(f, g, q, r);
    if (r.is_zero()) return 0;
    // Res(f, g) = (-1)^(df dg) lc(g)^(df - dr) Res(g, r)
    if ((df * dg) % 2) sign = -sign;
    for (int i = 0; i < df - r.degree(); ++i) acc *= g.lead();
    f = std::move(g);
    g = std::move(r);
  }
}

}  // namespace

Int resultant(const ZPoly& f, const ZPoly& g) {
  Rat r = resultant_q(QPoly(f), QPoly(g));
  if (r.get_den() != 1) throw DomainError("non-integral resultant");
  return Int(r.get_num());
}

Int discriminant(const ZPoly& f) {
  if (f.is_zero() || f.degree() < 1) throw DomainError("discriminant needs degree >= 1");
  const int n = f.degree();
  Int r = resultant(f, f.derivative());
  Int d = r / f.lead();
  if (((n * (n - 1)) / 2) % 2) d = -d;
  return d;
}

bool is_squarefree(const ZPoly& f) {
  if (f.degree() < 1) return true;
  return QPoly::gcd(QPoly(f), QPoly(f.derivative())).degree() == 0;
}

ZPoly squarefree_part(const ZPoly& f) {
  if (f.degree() < 1) return f;
  QPoly g = QPoly::gcd(QPoly(f), QPoly(f.derivative()));
  QPoly q, r;
  QPoly::divmod(QPoly(f), g, q, r);
  return q.primitive_part();
}

namespace {

std::vector<QPoly> sturm_sequence(const ZPoly& f) {
  std::vector<QPoly> seq{QPoly(f), QPoly(f.derivative())};
  while (!seq.back().is_zero()) {
    QPoly q, r;
    QPoly::divmod(seq[seq.size() - 2], seq.back(), q, r);
    if (r.is_zero()) break;
    seq.push_back(Rat(-1) * r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<int>& signs) {
  int prev = 0, changes = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int changes_at(const std::vector<QPoly>& seq, const Rat& x) {
  std::vector<int> s;
  for (auto& p : seq) s.push_back(sgn(p.eval(x)));
  return sign_changes(s);
}

void require_squarefree(const ZPoly& f) {
  if (f.is_zero() || f.degree() < 1) throw DomainError("Sturm sequence needs degree >= 1");
  if (!is_squarefree(f)) throw DomainError("polynomial is not squarefree: " + f.to_string());
}

}  // namespace

int sturm_real_roots(const ZPoly& f) {
  require_squarefree(f);
  auto seq = sturm_sequence(f);
  std::vector<int> neg, pos;
  for (auto& p : seq) {
    int s = sgn(p.lead());
    pos.push_back(s);
    neg.push_back(p.degree() % 2 ? -s : s);
  }
  return sign_changes(neg) - sign_changes(pos);
}

int sturm_count(const ZPoly& f, const Rat& a, const Rat& b) {
  require_squarefree(f);
  if (f.eval(a) == 0 || f.eval(b) == 0) throw DomainError("Sturm interval endpoint is a root");
  auto seq = sturm_sequence(f);
  return changes_at(seq, a) - changes_at(seq, b);
}

std::vector<Int> integer_roots(const ZPoly& f) {
  if (f.is_zero()) throw DomainError("integer roots of zero polynomial");
  std::vector<Int> roots;
  if (f.degree() < 1) return roots;
  ZPoly g = squarefree_part(f);
  // Endpoints k + off with off = floor(q/2)/q and q prime not dividing lc(g):
  // never an integer and never a rational root of g.
  unsigned long q = 3;
  while (mpz_divisible_ui_p(g.lead().get_mpz_t(), q)) {
    Int n;
    mpz_nextprime(n.get_mpz_t(), Int(q).get_mpz_t());
    q = mpz_get_ui(n.get_mpz_t());
  }
  const Rat off(static_cast<long>(q / 2), static_cast<long>(q));
  Rat bound = 0;
  for (int i = 0; i < g.degree(); ++i) bound = std::max(bound, Rat(Rat(abs(g.coeff(i))) / Rat(abs(g.lead()))));
  Int hi(Int(bound.get_num() / bound.get_den()) + 2);
  auto seq = sturm_sequence(g);
  auto edge = [&](const Int& k) -> Rat { return Rat(k) + off; };
  // Interval (edge(lo-1), edge(hi)] holds the integers lo..hi.
  std::vector<std::pair<Int, Int>> work{{-hi, hi}};
  while (!work.empty()) {
    auto [lo, up] = work.back();
    work.pop_back();
    int cnt = changes_at(seq, edge(lo - 1)) - changes_at(seq, edge(up));
    if (cnt == 0) continue;
    if (lo == up) {
      if (g.eval(lo) == 0) roots.push_back(lo);
      continue;
    }
    Int mid = lo + (up - lo) / 2;
    work.push_back({lo, mid});
    work.push_back({mid + 1, up});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rat> rational_roots(const ZPoly& f) {
  if (f.is_zero()) throw DomainError("rational roots of zero polynomial");
  std::vector<Rat> out;
  if (f.degree() < 1) return out;
  ZPoly g = f.monic_transform();
  for (auto& r : integer_roots(g)) {
    Rat x(r, f.lead());
    x.canonicalize();
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace exc
