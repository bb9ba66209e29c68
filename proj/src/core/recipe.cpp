#include "recipe.hpp"

#include "errors.hpp"

#include <algorithm>
#include <numeric>

namespace exc {

using nlohmann::json;

namespace {

json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json set_json(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

int div_exact(std::uint64_t num, int den) {
  if (num % static_cast<std::uint64_t>(den) != 0)
    throw InconsistencyError("weight formula is not integral");
  return static_cast<int>(num / static_cast<std::uint64_t>(den));
}

std::string p_str(std::uint64_t p) { return std::to_string(p); }

}  // namespace

json WeightSet::to_json() const {
  json j{{"values", set_json(values)}, {"outside_window", set_json(outside_window)}};
  if (partition) j["partition"] = {{"plus", set_json(partition->first)}, {"minus", set_json(partition->second)}};
  return j;
}

WeightSet weight_set(const LocalGaloisType& t, std::uint64_t ell) {
  if (ell < 3 || !is_prime(ell)) throw DomainError("ell must be an odd prime");
  if (t.p != ell) throw DomainError("weight set needs the local type at ell = " + p_str(ell));
  WeightSet w;
  auto add = [&](std::initializer_list<int> ks) { w.values.insert(ks); };
  const std::uint64_t l = ell;
  switch (t.kind) {
    case LocalKind::Unramified:
    case LocalKind::WildCyclic: break;
    case LocalKind::TameCyclic: {
      const int e = t.e;
      if ((l - 1) % static_cast<std::uint64_t>(e) != 0)
        throw InconsistencyError("tame cyclic type with e=" + std::to_string(e) + " but ell != 1 mod e");
      switch (e) {
        case 2: add({div_exact(l + 1, 2)}); break;
        case 3: add({div_exact(l + 2, 3), div_exact(2 * l + 1, 3)}); break;
        case 4: add({div_exact(l + 3, 4), div_exact(3 * l + 1, 4)}); break;
        case 5: {
          std::set<int> plus{div_exact(l + 4, 5), div_exact(4 * l + 1, 5)};
          std::set<int> minus{div_exact(2 * l + 3, 5), div_exact(3 * l + 2, 5)};
          w.values.insert(plus.begin(), plus.end());
          w.values.insert(minus.begin(), minus.end());
          w.partition = std::make_pair(plus, minus);
          break;
        }
        default: throw InconsistencyError("ramification index " + std::to_string(e) + " out of range");
      }
      break;
    }
    case LocalKind::WildDihedralEll:
      if (static_cast<std::uint64_t>(t.m) != l) throw InconsistencyError("wild dihedral type with m != ell");
      if (!t.totally_ramified) break;
      if (l == 5) {
        add({3});
      } else if (t.regime == Regime::Peu) {
        add({2});
      } else if (t.regime == Regime::Tres) {
        add({4});
      } else {
        throw InconsistencyError("totally ramified wild dihedral type at 3 without a regime");
      }
      break;
    case LocalKind::TameDihedral:
    case LocalKind::DihedralTwoPower: {
      const int m = t.kind == LocalKind::TameDihedral ? t.m : t.group_order / 2;
      if (t.kind == LocalKind::DihedralTwoPower && !t.m_unramified)
        throw InconsistencyError("tame 2-power dihedral type at ell with ramified M");
      if ((l + 1) % static_cast<std::uint64_t>(m) != 0)
        throw InconsistencyError("tame dihedral type with m=" + std::to_string(m) + " but ell != -1 mod m");
      switch (m) {
        case 2: add({div_exact(l + 3, 2)}); break;
        case 3: add({div_exact(l + 4, 3), div_exact(2 * l + 5, 3)}); break;
        case 4: add({div_exact(l + 5, 4), div_exact(3 * l + 7, 4)}); break;
        case 5: {
          std::set<int> plus{div_exact(l + 6, 5), div_exact(4 * l + 9, 5)};
          std::set<int> minus{div_exact(2 * l + 7, 5), div_exact(3 * l + 8, 5)};
          w.values.insert(plus.begin(), plus.end());
          w.values.insert(minus.begin(), minus.end());
          w.partition = std::make_pair(plus, minus);
          break;
        }
        default: throw InconsistencyError("dihedral rotation order " + std::to_string(m) + " out of range");
      }
      break;
    }
    case LocalKind::PrimitiveA4:
    case LocalKind::PrimitiveS4: throw InconsistencyError("primitive local type at odd ell");
  }
  if (w.partition && !(t.local_degree() % 5 == 0 && l != 5))
    throw InconsistencyError("weight partition without degree divisible by 5");
  for (int k : w.values)
    if (k < 2 || static_cast<std::uint64_t>(k) > l - 1) w.outside_window.insert(k);
  return w;
}

DirichletChar epsilon_p(const LocalGaloisType& t, std::uint64_t p) {
  switch (t.kind) {
    case LocalKind::Unramified:
    case LocalKind::TameDihedral: return DirichletChar::trivial();
    case LocalKind::TameCyclic:
      // canonical alpha: the generator mod p goes to zeta_e
      return DirichletChar(p, static_cast<std::uint64_t>(t.e), {1});
    case LocalKind::WildCyclic:
      if (p != 2 && static_cast<std::uint64_t>(t.m) == p) return DirichletChar(p * p, p, {1});
      if (p == 2 && t.m == 2 && t.alpha_signs)
        return DirichletChar::two_adic_quadratic(t.alpha_signs->first, t.alpha_signs->second);
      throw ExternalReferenceError("external-reference case: determinant for wild cyclic type " + t.label() +
                                   " at p=" + p_str(p) + " is not restated");
    case LocalKind::WildDihedralEll:
      return t.totally_ramified ? DirichletChar::legendre(p) : DirichletChar::trivial();
    case LocalKind::DihedralTwoPower:
      if (p != 2 && t.group_order == 8) {
        if (p % 4 != 3) throw InconsistencyError("tame D4 type at p != 3 mod 4");
        return DirichletChar::legendre(p);
      }
      throw ExternalReferenceError("external-reference case: determinant for " + t.label() + " at p=" + p_str(p) +
                                   " depends on the characters psi_1, psi_2 of the general dihedral lift");
    case LocalKind::PrimitiveA4: return DirichletChar::two_adic_quadratic(-1, 1);
    case LocalKind::PrimitiveS4:
      return t.variant == WeilVariant::M2 ? DirichletChar::two_adic_quadratic(-1, 1) : DirichletChar::trivial();
  }
  throw InconsistencyError("unknown local type");
}

int n_p(const LocalGaloisType& t, const DirichletChar& phi) {
  const std::uint64_t p = t.p;
  const std::uint64_t m = phi.modulus();
  std::uint64_t rest = m;
  while (rest % p == 0) rest /= p;
  if (rest != 1) throw DomainError("twist must be a character of U_p, got modulus " + std::to_string(m));
  const int c = phi.conductor_exponent(p);
  auto two_max = [](int a, int b) { return 2 * std::max(a, b); };
  switch (t.kind) {
    case LocalKind::Unramified: return 2 * c;
    case LocalKind::TameCyclic:
    case LocalKind::WildCyclic: return (epsilon_p(t, p) * phi).conductor_exponent(p) + c;
    case LocalKind::TameDihedral: return two_max(1, c);
    case LocalKind::WildDihedralEll: {
      if (!t.b) throw InconsistencyError("wild dihedral type without b");
      const int b = *t.b;
      if (!t.totally_ramified) return two_max(b, c);
      return c <= 1 ? 1 + b : 1 + std::max(b, 2 * c + 1);
    }
    case LocalKind::DihedralTwoPower:
      if (p != 2) return two_max(1, c);
      throw ExternalReferenceError("external-reference case: conductor of the lift for wild " + t.label() +
                                   " at 2 needs the break data (b, t)");
    case LocalKind::PrimitiveA4: return c <= 2 ? 5 : 2 * c;
    case LocalKind::PrimitiveS4:
      if (t.variant == WeilVariant::M4) return c <= 1 ? 3 : 2 * c;
      return c <= 3 ? 7 : 2 * c;
  }
  throw InconsistencyError("unknown local type");
}

int delta_p(const LocalGaloisType& t, const DirichletChar& phi, std::uint64_t ell) {
  // Only a dihedral type with ell | m and M unramified degenerates; there the
  // quadratic character of M is trivial on units.
  if (t.kind == LocalKind::TameDihedral && static_cast<std::uint64_t>(t.m) % ell == 0)
    return phi.prime_to(ell).is_trivial() ? 1 : 0;
  return 0;
}

json TwistWitness::to_json() const {
  json a = json::array();
  for (const auto& [p, chi] : phi)
    a.push_back({{"p", p}, {"c", chi.conductor_exponent(p)}, {"phi", chi.to_json()}});
  return a;
}

json SerreTypeFamily::to_json() const {
  json tw = json::array();
  for (const auto& w : twists) tw.push_back(w.to_json());
  json j{{"twist", tw},
         {"N", int_json(N)},
         {"weights", weights.to_json()},
         {"nu", nu.to_json()},
         {"nu_trivial", nu.chi.is_trivial()},
         {"sign_indeterminate", sign_indeterminate},
         {"partial", partial},
         {"errors", errors},
         {"notes", notes}};
  return j;
}

bool SerreTypes::partial() const {
  return std::any_of(families.begin(), families.end(), [](const SerreTypeFamily& f) { return f.partial; });
}

json SerreTypes::to_json() const {
  json fams = json::array();
  for (const auto& f : families) fams.push_back(f.to_json());
  return {{"ell", ell}, {"weights", weights.to_json()}, {"families", fams}, {"notes", notes}, {"partial", partial()}};
}

TwistEvaluation evaluate_twist(const FieldAnalysis& a, std::uint64_t ell, const TwistWitness& w) {
  TwistEvaluation out;
  DirichletChar nu(1);
  for (auto p : a.ramified_primes) {
    if (p == ell) continue;
    auto it = a.local.find(p);
    if (it == a.local.end()) {
      auto e = a.local_errors.find(p);
      out.errors.push_back("p=" + p_str(p) + ": " + (e != a.local_errors.end() ? e->second : "no local type"));
      continue;
    }
    const LocalGaloisType& t = it->second.type;
    auto ph = w.phi.find(p);
    const DirichletChar phi = ph != w.phi.end() ? ph->second : DirichletChar(1);
    try {
      const int e = n_p(t, phi) - delta_p(t, phi, ell);
      for (int i = 0; i < e; ++i) out.N *= static_cast<unsigned long>(p);
    } catch (const ExternalReferenceError& ex) {
      out.errors.push_back("p=" + p_str(p) + ": " + ex.what());
    }
    try {
      nu = nu * (epsilon_p(t, p) * phi.square()).inverse();
    } catch (const ExternalReferenceError& ex) {
      out.errors.push_back("p=" + p_str(p) + ": " + ex.what());
    }
  }
  DirichletChar red = nu.prime_to(ell).primitive();
  if (out.errors.empty()) {
    if (!out.N.fits_ulong_p()) throw DomainError("level does not fit in 64 bits");
    const std::uint64_t n = out.N.get_ui();
    if (n % red.modulus() != 0)
      throw InconsistencyError("nebentypus conductor " + std::to_string(red.modulus()) + " does not divide N = " +
                               std::to_string(n));
    red = red.lift(n);
  }
  out.nu = reduce_mod_lambda(red, ell);
  return out;
}

SerreTypes enumerate_serre_types(const FieldAnalysis& a, std::uint64_t ell,
                                 const std::map<std::uint64_t, int>& bounds, int fallback) {
  SerreTypes out;
  out.ell = ell;
  if (a.ell != ell) throw DomainError("analysis was made for ell = " + p_str(a.ell));
  if (a.definitive_negative()) {
    out.notes.push_back(a.negative_reason);
    return out;
  }
  auto at_ell = a.local.find(ell);
  if (at_ell == a.local.end()) {
    auto e = a.local_errors.find(ell);
    throw InconsistencyError("no local type at ell: " + (e != a.local_errors.end() ? e->second : std::string("?")));
  }
  out.weights = weight_set(at_ell->second.type, ell);

  std::vector<std::uint64_t> primes;
  std::vector<std::vector<LocalTwist>> choices;
  std::uint64_t total = 1;
  for (auto p : a.ramified_primes) {
    if (p == ell) continue;
    auto b = bounds.find(p);
    primes.push_back(p);
    choices.push_back(enumerate_local_twists(p, b != bounds.end() ? b->second : fallback, ell));
    total *= choices.back().size();
    if (total > 5'000'000) throw DomainError("twist search too large; lower the twist bound");
  }

  std::vector<SerreTypeFamily> fams;
  std::map<std::string, size_t> index;
  std::vector<size_t> pos(primes.size(), 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    TwistWitness w;
    for (size_t i = 0; i < primes.size(); ++i) w.phi[primes[i]] = choices[i][pos[i]].phi;
    TwistEvaluation ev = evaluate_twist(a, ell, w);
    std::string key = ev.N.get_str() + "|" + ev.nu.chi.to_json().dump();
    for (const auto& e : ev.errors) key += "|" + e;
    auto it = index.find(key);
    if (it == index.end()) {
      SerreTypeFamily f;
      f.N = ev.N;
      f.nu = ev.nu;
      f.weights = out.weights;
      f.sign_indeterminate = out.weights.partition.has_value();
      f.partial = !ev.errors.empty();
      f.errors = ev.errors;
      index.emplace(key, fams.size());
      fams.push_back(std::move(f));
      it = index.find(key);
    }
    fams[it->second].twists.push_back(std::move(w));
    for (size_t i = primes.size(); i-- > 0;) {
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
    }
  }
  std::stable_sort(fams.begin(), fams.end(), [](const SerreTypeFamily& x, const SerreTypeFamily& y) {
    if (x.N != y.N) return x.N < y.N;
    return x.nu.chi < y.nu.chi;
  });

  std::vector<std::string> notes;
  if (a.group.kind == GroupKind::A5)
    notes.push_back("modularity assumed: existence of forms requires K to be cut out by a modular representation");
  if (out.weights.partition)
    notes.push_back("sign indeterminate: k lies in W+ or in W- for one unknown sign");
  if (!out.weights.outside_window.empty())
    notes.push_back("weights outside the window 2 <= k <= ell-1 are reported but flagged");
  if (out.weights.empty()) notes.push_back("empty weight set at ell");
  for (auto& f : fams) f.notes = notes;
  out.notes = notes;
  out.families = std::move(fams);
  return out;
}

SerreTypeFamily auxiliary_twist(const SerreTypeFamily& family, const DirichletChar& phi,
                                const std::vector<std::uint64_t>& ramified) {
  const std::uint64_t ell = family.nu.ell;
  const std::uint64_t m = phi.conductor();
  if (std::gcd(m, ell) != 1) throw DomainError("twist conductor is not prime to ell");
  for (auto p : ramified)
    if (m % p == 0) throw DomainError("twist conductor is divisible by the ramified prime " + p_str(p));
  SerreTypeFamily out = family;
  out.N = family.N * m * m;
  if (!out.N.fits_ulong_p()) throw DomainError("level does not fit in 64 bits");
  const DirichletChar nu = (family.nu.chi * phi.primitive().square()).prime_to(ell).primitive();
  out.nu = reduce_mod_lambda(nu.lift(out.N.get_ui()), ell);
  out.notes.push_back("auxiliary twist by a character of conductor " + std::to_string(m));
  return out;
}

const char* to_string(Variant2 v) {
  switch (v) {
    case Variant2::Unramified: return "unramified";
    case Variant2::M2: return "M2";
    case Variant2::M3: return "M3";
    case Variant2::M4: return "M4";
  }
  return "?";
}

Variant2 parse_variant2(const std::string& s) {
  for (auto v : {Variant2::Unramified, Variant2::M2, Variant2::M3, Variant2::M4})
    if (s == to_string(v)) return v;
  throw FormatError("unknown variant '" + s + "' (expected unramified, M2, M3 or M4)");
}

CorollaryRow corollary_table(Variant2 v, int c) {
  if (c < 0) throw DomainError("conductor exponent must be non-negative");
  switch (v) {
    case Variant2::Unramified: return {2 * c, DirichletChar(1)};
    case Variant2::M2: return {c <= 3 ? 7 : 2 * c, DirichletChar::two_adic_quadratic(-1, 1)};
    case Variant2::M3: return {c <= 3 ? 7 : 2 * c, DirichletChar(1)};
    case Variant2::M4: return {c <= 1 ? 3 : 2 * c, DirichletChar(1)};
  }
  throw DomainError("unknown variant");
}

}  // namespace exc
