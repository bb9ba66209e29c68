#include "character.hpp"

#include "errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace exc {

using nlohmann::json;

namespace {

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  if (n <= 1) return out;
  for (auto& [p, e] : factor(Int(static_cast<unsigned long>(n)))) out.emplace_back(to_u64(p), e);
  return out;
}

std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
  const std::int64_t r = a % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

// Discrete log of a unit in the cyclic factor described by g.
std::uint64_t component_log(std::int64_t a, const CharGenerator& g) {
  const std::uint64_t pk = ipow(g.p, static_cast<unsigned>(g.k));
  std::uint64_t b = reduce(a, pk);
  if (g.p == 2) {
    if (g.generator == -1) return b % 4 == 3 ? 1 : 0;
    if (b % 4 == 3) b = pk - b;
    return discrete_log(b, 5, g.cyclic_order, pk);
  }
  return discrete_log(b, static_cast<std::uint64_t>(g.generator), g.cyclic_order, pk);
}

}  // namespace

std::string CharGenerator::label() const {
  return std::to_string(p) + "^" + std::to_string(k) + ":" + std::to_string(generator);
}

namespace {

std::vector<CharGenerator> compute_generators(std::uint64_t modulus) {
  std::vector<CharGenerator> gens;
  for (auto [p, k] : factor_u64(modulus)) {
    if (p == 2) {
      if (k >= 2) gens.push_back({2, k, -1, 2});
      if (k >= 3) gens.push_back({2, k, 5, ipow(2, static_cast<unsigned>(k - 2))});
    } else {
      const std::uint64_t phi = ipow(p, static_cast<unsigned>(k - 1)) * (p - 1);
      gens.push_back({p, k, static_cast<std::int64_t>(canonical_primitive_root(p)), phi});
    }
  }
  return gens;
}

}  // namespace

std::vector<CharGenerator> canonical_generators(std::uint64_t modulus) {
  if (modulus == 0) throw DomainError("modulus must be positive");
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<CharGenerator>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(modulus);
  if (it == cache.end()) {
    if (cache.size() > 4096) cache.clear();
    it = cache.emplace(modulus, compute_generators(modulus)).first;
  }
  return it->second;
}

DirichletChar::DirichletChar(std::uint64_t modulus) : modulus_(modulus) {
  exps_.assign(canonical_generators(modulus).size(), 0);
}

DirichletChar::DirichletChar(std::uint64_t modulus, std::uint64_t order, std::vector<std::uint64_t> exponents)
    : modulus_(modulus), order_(order), exps_(std::move(exponents)) {
  if (order_ == 0) throw DomainError("character order must be positive");
  const auto gens = canonical_generators(modulus_);
  if (gens.size() != exps_.size())
    throw DomainError("expected " + std::to_string(gens.size()) + " exponents for modulus " +
                      std::to_string(modulus_));
  for (size_t i = 0; i < gens.size(); ++i) {
    exps_[i] %= order_;
    // zeta_n^(e * |<g>|) must be 1
    if (static_cast<unsigned __int128>(exps_[i]) * gens[i].cyclic_order % order_ != 0)
      throw DomainError("exponent on " + gens[i].label() + " is not compatible with the generator order");
  }
  normalize();
}

void DirichletChar::normalize() {
  std::uint64_t g = order_;
  for (auto e : exps_) g = std::gcd(g, e);
  order_ /= g;
  for (auto& e : exps_) e /= g;
}

DirichletChar DirichletChar::legendre(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw DomainError("legendre character needs an odd prime");
  return DirichletChar(p, 2, {1});
}

DirichletChar DirichletChar::two_adic_quadratic(int at_minus_one, int at_five) {
  if (at_five == -1) return DirichletChar(8, 2, {at_minus_one == -1 ? 1u : 0u, 1});
  if (at_minus_one == -1) return DirichletChar(4, 2, {1});
  return DirichletChar(1);
}

std::uint64_t DirichletChar::log_value(std::int64_t a) const {
  if (std::gcd(reduce(a, modulus_), modulus_) != 1 && modulus_ > 1)
    throw DomainError(std::to_string(a) + " is not a unit mod " + std::to_string(modulus_));
  const auto gens = generators();
  std::uint64_t v = 0;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (exps_[i] == 0) continue;
    v = (v + mulmod(exps_[i], component_log(a, gens[i]) % order_, order_)) % order_;
  }
  return v;
}

Rat DirichletChar::value(std::int64_t a) const {
  Rat r(Int(static_cast<unsigned long>(log_value(a))), Int(static_cast<unsigned long>(order_)));
  r.canonicalize();
  return r;
}

int DirichletChar::conductor_exponent(std::uint64_t p) const {
  const auto gens = generators();
  std::uint64_t e_minus = 0, e_five = 0;
  bool found = false;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].p != p) continue;
    found = true;
    const std::uint64_t o = order_ / std::gcd(order_, exps_[i]);
    if (p != 2) return o == 1 ? 0 : 1 + valuation(Int(static_cast<unsigned long>(o)), Int(static_cast<unsigned long>(p)));
    if (gens[i].generator == -1)
      e_minus = exps_[i];
    else
      e_five = o;
  }
  if (!found) return 0;
  if (e_five > 1) {
    int c = 2;
    while (e_five > 1) {
      e_five /= 2;
      ++c;
    }
    return c;
  }
  return e_minus != 0 ? 2 : 0;
}

std::uint64_t DirichletChar::conductor() const {
  std::uint64_t f = 1;
  for (auto [p, k] : factor_u64(modulus_)) {
    (void)k;
    f *= ipow(p, static_cast<unsigned>(conductor_exponent(p)));
  }
  return f;
}

namespace {

std::vector<std::uint64_t> transfer(const DirichletChar& chi, std::uint64_t target) {
  const auto from = chi.generators();
  const auto to = canonical_generators(target);
  std::vector<std::uint64_t> out(to.size(), 0);
  for (size_t i = 0; i < to.size(); ++i)
    for (size_t j = 0; j < from.size(); ++j)
      if (from[j].p == to[i].p && from[j].generator == to[i].generator) out[i] = chi.exponents()[j];
  return out;
}

}  // namespace

DirichletChar DirichletChar::lift(std::uint64_t m) const {
  if (m % modulus_ != 0)
    throw DomainError("cannot lift a character mod " + std::to_string(modulus_) + " to modulus " + std::to_string(m));
  return DirichletChar(m, order_, transfer(*this, m));
}

DirichletChar DirichletChar::primitive() const {
  const std::uint64_t f = conductor();
  return DirichletChar(f, order_, transfer(*this, f));
}

DirichletChar DirichletChar::component(std::uint64_t p) const {
  std::uint64_t pk = 1;
  while (modulus_ % (pk * p) == 0) pk *= p;
  return DirichletChar(pk, order_, transfer(*this, pk));
}

DirichletChar DirichletChar::operator*(const DirichletChar& o) const {
  const std::uint64_t m = std::lcm(modulus_, o.modulus_);
  const DirichletChar a = lift(m), b = o.lift(m);
  const std::uint64_t n = std::lcm(a.order_, b.order_);
  std::vector<std::uint64_t> e(a.exps_.size());
  for (size_t i = 0; i < e.size(); ++i)
    e[i] = (mulmod(a.exps_[i], n / a.order_, n) + mulmod(b.exps_[i], n / b.order_, n)) % n;
  return DirichletChar(m, n, std::move(e));
}

DirichletChar DirichletChar::inverse() const { return pow(-1); }

DirichletChar DirichletChar::pow(std::int64_t k) const {
  const std::uint64_t kk = reduce(k, order_);
  std::vector<std::uint64_t> e(exps_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = mulmod(exps_[i], kk, order_);
  return DirichletChar(modulus_, order_, std::move(e));
}

DirichletChar DirichletChar::prime_to(std::uint64_t ell) const {
  std::uint64_t ella = 1, rest = order_;
  while (rest % ell == 0) {
    rest /= ell;
    ella *= ell;
  }
  if (ella == 1) return *this;
  // x = 0 mod ell^a, x = 1 mod rest
  const std::uint64_t x = rest == 1 ? 0 : mulmod(ella, invmod(ella % rest, rest), order_);
  std::vector<std::uint64_t> e(exps_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = mulmod(exps_[i], x, order_);
  return DirichletChar(modulus_, order_, std::move(e));
}

bool operator<(const DirichletChar& a, const DirichletChar& b) {
  return std::tie(a.modulus_, a.order_, a.exps_) < std::tie(b.modulus_, b.order_, b.exps_);
}

json DirichletChar::to_json() const {
  json ex = json::object();
  const auto gens = generators();
  for (size_t i = 0; i < gens.size(); ++i) ex[gens[i].label()] = exps_[i];
  return {{"modulus", modulus_}, {"order", order_}, {"exponents", ex}};
}

DirichletChar DirichletChar::from_json(const json& j) {
  try {
    const auto m = j.at("modulus").get<std::uint64_t>();
    const auto n = j.at("order").get<std::uint64_t>();
    const auto gens = canonical_generators(m);
    std::vector<std::uint64_t> e(gens.size(), 0);
    if (j.contains("exponents")) {
      for (auto it = j.at("exponents").begin(); it != j.at("exponents").end(); ++it) {
        auto pos = std::find_if(gens.begin(), gens.end(), [&](const CharGenerator& g) { return g.label() == it.key(); });
        if (pos == gens.end()) throw FormatError("unknown generator label '" + it.key() + "' for modulus " + std::to_string(m));
        e[pos - gens.begin()] = it.value().get<std::uint64_t>();
      }
    }
    return DirichletChar(m, n, std::move(e));
  } catch (const json::exception& ex) {
    throw FormatError(std::string("character: ") + ex.what());
  } catch (const DomainError& ex) {
    throw FormatError(std::string("character: ") + ex.what());
  }
}

std::string DirichletChar::describe() const {
  std::ostringstream os;
  if (is_trivial()) {
    os << "trivial mod " << modulus_;
  } else {
    os << "order " << order_ << " mod " << modulus_ << " (conductor " << conductor() << ")";
  }
  return os.str();
}

bool equivalent(const DirichletChar& a, const DirichletChar& b) { return a.primitive() == b.primitive(); }

std::vector<DirichletChar> all_characters(std::uint64_t modulus) {
  const auto gens = canonical_generators(modulus);
  std::uint64_t n = 1;
  for (const auto& g : gens) n = std::lcm(n, g.cyclic_order);
  std::vector<DirichletChar> out;
  std::vector<std::uint64_t> j(gens.size(), 0);
  for (bool done = false; !done;) {
    std::vector<std::uint64_t> e(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) e[i] = j[i] * (n / gens[i].cyclic_order);
    out.emplace_back(modulus, n, std::move(e));
    // odometer step, last generator fastest
    done = true;
    for (size_t i = gens.size(); i-- > 0;) {
      if (++j[i] < gens[i].cyclic_order) {
        done = false;
        break;
      }
      j[i] = 0;
    }
  }
  std::vector<std::pair<std::uint64_t, size_t>> keys;
  for (size_t i = 0; i < out.size(); ++i) keys.emplace_back(out[i].conductor(), i);
  std::stable_sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<DirichletChar> sorted;
  sorted.reserve(out.size());
  for (auto& [f, i] : keys) sorted.push_back(std::move(out[i]));
  return sorted;
}

json ModLChar::to_json() const {
  json j = chi.to_json();
  j["ell"] = ell;
  return j;
}

ModLChar reduce_mod_lambda(const DirichletChar& chi, std::uint64_t ell) {
  if (chi.order() % ell == 0)
    throw DomainError("order not prime to ell: character of order " + std::to_string(chi.order()) + ", ell = " +
                      std::to_string(ell));
  return {chi, ell};
}

std::vector<LocalTwist> enumerate_local_twists(std::uint64_t p, int c_max, std::uint64_t ell) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  if (c_max < 0) throw DomainError("conductor bound must be non-negative");
  std::vector<LocalTwist> out;
  std::uint64_t pc = 1;
  for (int c = 0; c <= c_max; ++c) {
    if (c > 0) {
      if (pc > UINT64_MAX / p) throw DomainError("conductor bound too large");
      pc *= p;
    }
    for (auto& chi : all_characters(pc)) {
      if (chi.conductor_exponent(p) != c) continue;
      if (ell != 0 && chi.order() % ell == 0) continue;
      out.push_back({std::move(chi), c});
    }
  }
  return out;
}

}  // namespace exc
