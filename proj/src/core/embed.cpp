#include "embed.hpp"

#include "errors.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace exc {

using nlohmann::json;

GaloisField::GaloisField(std::uint64_t ell, int m) : ell_(ell), m_(m) {
  if (!is_prime(ell)) throw DomainError("field characteristic must be prime");
  if (m < 1 || m > 12) throw DomainError("extension degree must be in 1..12");
  q_ = ipow(ell, static_cast<unsigned>(m));
  if (q_ > 100'000'000) throw DomainError("field too large");
  // monic irreducibles in order of the base-ell value of the lower coefficients
  for (std::uint64_t i = 0;; ++i) {
    std::vector<std::uint64_t> c(static_cast<size_t>(m) + 1, 0);
    std::uint64_t r = i;
    for (int k = 0; k < m; ++k) {
      c[static_cast<size_t>(k)] = r % ell;
      r /= ell;
    }
    c[static_cast<size_t>(m)] = 1;
    PrimeFieldPoly f(ell, c);
    if (is_irreducible(f)) {
      mod_ = f;
      break;
    }
  }
}

GaloisField::Elem GaloisField::from_int(std::int64_t a) const {
  std::int64_t r = a % static_cast<std::int64_t>(ell_);
  if (r < 0) r += static_cast<std::int64_t>(ell_);
  return PrimeFieldPoly(ell_, std::vector<std::uint64_t>{static_cast<std::uint64_t>(r)});
}

GaloisField::Elem GaloisField::from_index(std::uint64_t i) const {
  std::vector<std::uint64_t> c;
  for (int k = 0; k < m_; ++k) {
    c.push_back(i % ell_);
    i /= ell_;
  }
  return PrimeFieldPoly(ell_, c);
}

GaloisField::Elem GaloisField::pow(const Elem& a, std::uint64_t e) const {
  return PrimeFieldPoly::powmod(a, Int(static_cast<unsigned long>(e)), mod_);
}

GaloisField::Elem GaloisField::inv(const Elem& a) const {
  if (a.is_zero()) throw DomainError("division by zero in finite field");
  return pow(a, q_ - 2);
}

GaloisField::Elem GaloisField::primitive_element() const {
  std::vector<std::uint64_t> qs;
  for (auto& [p, e] : factor(Int(static_cast<unsigned long>(q_ - 1)))) qs.push_back(to_u64(p));
  for (std::uint64_t i = 1; i < q_; ++i) {
    Elem g = from_index(i);
    bool ok = true;
    for (auto r : qs)
      if (pow(g, (q_ - 1) / r).is_one()) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw DomainError("no primitive element");
}

std::string GaloisField::str(const Elem& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = a.coeffs();
  for (size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0 || c[k] != 1) os << c[k];
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Cyclotomic5 Cyclotomic5::from_int(long a) {
  Cyclotomic5 z;
  z.c[0] = a;
  return z;
}

Cyclotomic5 Cyclotomic5::zeta_pow(int k) {
  k = ((k % 5) + 5) % 5;
  Cyclotomic5 z;
  if (k < 4) {
    z.c[static_cast<size_t>(k)] = 1;
  } else {
    for (auto& x : z.c) x = -1;
  }
  return z;
}

Cyclotomic5 operator+(const Cyclotomic5& a, const Cyclotomic5& b) {
  Cyclotomic5 r;
  for (size_t i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Cyclotomic5 operator-(const Cyclotomic5& a, const Cyclotomic5& b) {
  Cyclotomic5 r;
  for (size_t i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Cyclotomic5 operator*(const Cyclotomic5& a, const Cyclotomic5& b) {
  std::array<Int, 5> t{};  // coefficients of z^0..z^4 after z^5 = 1
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) t[(i + j) % 5] += a.c[i] * b.c[j];
  Cyclotomic5 r;
  for (size_t i = 0; i < 4; ++i) r.c[i] = t[i] - t[4];
  return r;
}

bool Cyclotomic5::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

std::string Cyclotomic5::str() const {
  std::ostringstream os;
  os << "[" << c[0].get_str() << "," << c[1].get_str() << "," << c[2].get_str() << "," << c[3].get_str() << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

GFMat mat_identity(const GaloisField& F) { return {{F.one(), F.zero(), F.zero(), F.one()}}; }

GFMat mat_mul(const GaloisField& F, const GFMat& a, const GFMat& b) {
  const auto& x = a.e;
  const auto& y = b.e;
  return {{F.add(F.mul(x[0], y[0]), F.mul(x[1], y[2])), F.add(F.mul(x[0], y[1]), F.mul(x[1], y[3])),
           F.add(F.mul(x[2], y[0]), F.mul(x[3], y[2])), F.add(F.mul(x[2], y[1]), F.mul(x[3], y[3]))}};
}

namespace {

CycMat cmul(const CycMat& a, const CycMat& b) {
  const auto& x = a.e;
  const auto& y = b.e;
  return {{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
           x[2] * y[1] + x[3] * y[3]}};
}

template <typename M, typename Mul>
M mpow(M a, int e, Mul mul) {
  M r = a;
  for (int i = 1; i < e; ++i) r = mul(r, a);
  return r;
}

bool gf_scalar(const GFMat& m) { return m.e[1].is_zero() && m.e[2].is_zero() && m.e[0] == m.e[3] && !m.e[0].is_zero(); }
bool cyc_scalar(const CycMat& m) { return m.e[1].is_zero() && m.e[2].is_zero() && m.e[0] == m.e[3] && !m.e[0].is_zero(); }

GaloisField::Elem det(const GaloisField& F, const GFMat& m) {
  return F.sub(F.mul(m.e[0], m.e[3]), F.mul(m.e[1], m.e[2]));
}

GFMat normalized(const GaloisField& F, const GFMat& m) {
  for (const auto& x : m.e)
    if (!x.is_zero()) {
      const auto s = F.inv(x);
      return {{F.mul(m.e[0], s), F.mul(m.e[1], s), F.mul(m.e[2], s), F.mul(m.e[3], s)}};
    }
  throw DomainError("zero matrix");
}

std::vector<std::uint64_t> key(const GaloisField& F, const GFMat& m) {
  std::vector<std::uint64_t> k;
  for (const auto& x : m.e) {
    auto c = x.coeffs();
    c.resize(static_cast<size_t>(F.degree()), 0);
    k.insert(k.end(), c.begin(), c.end());
  }
  return k;
}

}  // namespace

std::pair<GFMat, GFMat> build_embedding(const GaloisField& F, int epsilon_power) {
  if (epsilon_power != 1 && epsilon_power != 2) throw DomainError("epsilon_power must be 1 or 2");
  const std::uint64_t ell = F.characteristic();
  if (ell == 2) throw DomainError("characteristic 2 is not supported");
  GaloisField::Elem eps = F.one();
  if (ell != 5) {
    if ((F.size() - 1) % 5 != 0)
      throw DomainError("F_" + std::to_string(F.size()) + " has no primitive 5th root of unity");
    eps = F.pow(F.pow(F.primitive_element(), (F.size() - 1) / 5), static_cast<std::uint64_t>(epsilon_power));
  }
  const auto ei = F.inv(eps);
  const auto e2 = F.mul(eps, eps), ei2 = F.mul(ei, ei);
  const auto omega = F.add(eps, ei);
  const auto c = F.sub(e2, ei2);
  const auto zero = F.zero();
  GFMat x{{F.sub(zero, c), omega, omega, c}};
  GFMat y{{e2, F.sub(zero, omega), zero, ei2}};
  return {x, y};
}

std::pair<CycMat, CycMat> build_embedding_cyclotomic(int epsilon_power) {
  if (epsilon_power != 1 && epsilon_power != 2) throw DomainError("epsilon_power must be 1 or 2");
  const int k = epsilon_power;
  const auto e2 = Cyclotomic5::zeta_pow(2 * k), ei2 = Cyclotomic5::zeta_pow(-2 * k);
  const auto omega = Cyclotomic5::zeta_pow(k) + Cyclotomic5::zeta_pow(-k);
  const auto c = e2 - ei2;
  const auto zero = Cyclotomic5::from_int(0);
  CycMat x{{zero - c, omega, omega, c}};
  CycMat y{{e2, zero - omega, zero, ei2}};
  return {x, y};
}

bool verify_presentation(const GaloisField& F, const GFMat& x, const GFMat& y) {
  auto mul = [&](const GFMat& a, const GFMat& b) { return mat_mul(F, a, b); };
  if (det(F, x).is_zero() || det(F, y).is_zero()) return false;
  return gf_scalar(mpow(x, 2, mul)) && gf_scalar(mpow(y, 5, mul)) && gf_scalar(mpow(mul(x, y), 3, mul));
}

bool verify_presentation(const CycMat& x, const CycMat& y) {
  auto d = [](const CycMat& m) { return m.e[0] * m.e[3] - m.e[1] * m.e[2]; };
  if (d(x).is_zero() || d(y).is_zero()) return false;
  return cyc_scalar(mpow(x, 2, cmul)) && cyc_scalar(mpow(y, 5, cmul)) && cyc_scalar(mpow(cmul(x, y), 3, cmul));
}

std::uint64_t generated_group_order(const GaloisField& F, const GFMat& x, const GFMat& y, std::uint64_t cap) {
  if (det(F, x).is_zero() || det(F, y).is_zero()) throw DomainError("singular generator");
  const GFMat gens[2] = {normalized(F, x), normalized(F, y)};
  std::set<std::vector<std::uint64_t>> seen;
  std::deque<GFMat> queue;
  const GFMat id = mat_identity(F);
  seen.insert(key(F, id));
  queue.push_back(id);
  while (!queue.empty()) {
    const GFMat g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      GFMat h = normalized(F, mat_mul(F, g, s));
      if (seen.insert(key(F, h)).second) {
        if (seen.size() > cap) throw DomainError("generated group exceeds the safety cap of " + std::to_string(cap));
        queue.push_back(h);
      }
    }
  }
  return seen.size();
}

std::vector<std::string> trace_fingerprint(const GaloisField& F, const GFMat& x, const GFMat& y) {
  auto mul = [&](const GFMat& a, const GFMat& b) { return mat_mul(F, a, b); };
  const GFMat y2 = mul(y, y);
  const std::vector<GFMat> words = {y, y2, mul(x, y), mul(x, y2), mul(mul(x, y), mul(x, y2))};
  std::vector<std::string> out;
  for (const auto& w : words) {
    const auto tr = F.add(w.e[0], w.e[3]);
    out.push_back(F.str(F.mul(F.mul(tr, tr), F.inv(det(F, w)))));
  }
  return out;
}

namespace {

json mat_json(const GaloisField& F, const GFMat& m) {
  return json::array({json::array({F.str(m.e[0]), F.str(m.e[1])}), json::array({F.str(m.e[2]), F.str(m.e[3])})});
}

json cmat_json(const CycMat& m) {
  auto el = [](const Cyclotomic5& z) {
    json a = json::array();
    for (const auto& c : z.c) a.push_back(c.get_si());
    return a;
  };
  return json::array({json::array({el(m.e[0]), el(m.e[1])}), json::array({el(m.e[2]), el(m.e[3])})});
}

}  // namespace

json embed_check(std::uint64_t ell, int m) {
  if (ell < 3 || !is_prime(ell)) throw DomainError("ell must be an odd prime");
  if (m == 0) {
    m = 1;
    if (ell != 5)
      while ((ipow(ell, static_cast<unsigned>(m)) - 1) % 5 != 0) ++m;
  }
  GaloisField F(ell, m);
  json field{{"ell", ell}, {"m", m}, {"size", F.size()}};
  json modc = json::array();
  for (auto c : F.modulus().coeffs()) modc.push_back(c);
  field["modulus"] = modc;
  json embs = json::array();
  std::vector<std::vector<std::string>> fps;
  const std::vector<int> powers = ell == 5 ? std::vector<int>{1} : std::vector<int>{1, 2};
  bool all_ok = true;
  for (int k : powers) {
    auto [x, y] = build_embedding(F, k);
    const bool pres = verify_presentation(F, x, y);
    const auto order = generated_group_order(F, x, y);
    auto fp = trace_fingerprint(F, x, y);
    fps.push_back(fp);
    all_ok = all_ok && pres && order == 60;
    embs.push_back({{"epsilon_power", k},
                    {"x", mat_json(F, x)},
                    {"y", mat_json(F, y)},
                    {"presentation", pres},
                    {"group_order", order},
                    {"fingerprint", fp}});
  }
  json j{{"field", field}, {"embeddings", embs}, {"ok", all_ok}};
  if (fps.size() == 2) {
    j["fingerprints_distinct"] = fps[0] != fps[1];
    j["ok"] = all_ok && fps[0] != fps[1];
  }
  return j;
}

json embed_check_cyclotomic() {
  json embs = json::array();
  bool ok = true;
  for (int k : {1, 2}) {
    auto [x, y] = build_embedding_cyclotomic(k);
    const bool pres = verify_presentation(x, y);
    ok = ok && pres;
    embs.push_back({{"epsilon_power", k}, {"x", cmat_json(x)}, {"y", cmat_json(y)}, {"presentation", pres}});
  }
  return {{"field", {{"cyclotomic", true}, {"basis", "1, z, z^2, z^3 with z^5 = 1"}}}, {"embeddings", embs}, {"ok", ok}};
}

}  // namespace exc
