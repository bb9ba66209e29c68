#include "local.hpp"

#include "errors.hpp"
#include "fpoly.hpp"
#include "perm.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace exc {

namespace detail {
extern const char* const kWeilTableJson;
}

using nlohmann::json;
using Splitting = std::vector<std::pair<int, int>>;

const char* to_string(LocalKind k) {
  switch (k) {
    case LocalKind::Unramified: return "Unramified";
    case LocalKind::TameCyclic: return "TameCyclic";
    case LocalKind::WildCyclic: return "WildCyclic";
    case LocalKind::TameDihedral: return "TameDihedral";
    case LocalKind::WildDihedralEll: return "WildDihedralEll";
    case LocalKind::DihedralTwoPower: return "DihedralTwoPower";
    case LocalKind::PrimitiveA4: return "PrimitiveA4";
    case LocalKind::PrimitiveS4: return "PrimitiveS4";
  }
  return "?";
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::NotApplicable: return "not_applicable";
    case Regime::Peu: return "peu";
    case Regime::Tres: return "tres";
  }
  return "?";
}

const char* to_string(WeilVariant v) {
  switch (v) {
    case WeilVariant::M2: return "M2";
    case WeilVariant::M3: return "M3";
    case WeilVariant::M4: return "M4";
  }
  return "?";
}

namespace {

template <typename E, size_t N>
E parse_enum(const std::string& s, const E (&values)[N]) {
  for (E v : values)
    if (s == to_string(v)) return v;
  throw FormatError("unknown enumeration value '" + s + "'");
}

const LocalKind kKinds[] = {LocalKind::Unramified,      LocalKind::TameCyclic,
                            LocalKind::WildCyclic,      LocalKind::TameDihedral,
                            LocalKind::WildDihedralEll, LocalKind::DihedralTwoPower,
                            LocalKind::PrimitiveA4,     LocalKind::PrimitiveS4};
const Regime kRegimes[] = {Regime::NotApplicable, Regime::Peu, Regime::Tres};
const WeilVariant kVariants[] = {WeilVariant::M2, WeilVariant::M3, WeilVariant::M4};

json opt(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<int> opt_int(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<int>();
}

}  // namespace

int LocalGaloisType::local_degree() const {
  switch (kind) {
    case LocalKind::Unramified: return f;
    case LocalKind::TameCyclic:
    case LocalKind::WildCyclic: return m;
    case LocalKind::TameDihedral:
    case LocalKind::WildDihedralEll: return 2 * m;
    case LocalKind::DihedralTwoPower: return group_order;
    case LocalKind::PrimitiveA4: return 12;
    case LocalKind::PrimitiveS4: return 24;
  }
  return 1;
}

bool LocalGaloisType::tame() const {
  switch (kind) {
    case LocalKind::Unramified:
    case LocalKind::TameCyclic:
    case LocalKind::TameDihedral: return true;
    case LocalKind::DihedralTwoPower: return p != 2;
    default: return false;
  }
}

std::string LocalGaloisType::label() const {
  std::ostringstream os;
  os << to_string(kind);
  switch (kind) {
    case LocalKind::Unramified: os << "(f=" << f << ")"; break;
    case LocalKind::TameCyclic: os << "(m=" << m << ",e=" << e << ")"; break;
    case LocalKind::WildCyclic: os << "(m=" << m << ")"; break;
    case LocalKind::TameDihedral: os << "(m=" << m << ")"; break;
    case LocalKind::WildDihedralEll:
      os << "(m=" << m << (totally_ramified ? ",totally" : ",partially") << ")";
      break;
    case LocalKind::DihedralTwoPower:
      os << "(order=" << group_order << (m_unramified ? ",M unramified" : ",M ramified") << ")";
      break;
    case LocalKind::PrimitiveA4: break;
    case LocalKind::PrimitiveS4: os << "(" << to_string(variant) << ")"; break;
  }
  return os.str();
}

json LocalGaloisType::to_json() const {
  json j;
  j["kind"] = to_string(kind);
  j["p"] = p;
  switch (kind) {
    case LocalKind::Unramified: j["f"] = f; break;
    case LocalKind::TameCyclic:
      j["m"] = m;
      j["e"] = e;
      break;
    case LocalKind::WildCyclic:
      j["m"] = m;
      j["alpha_conductor"] = opt(alpha_conductor);
      if (alpha_signs) j["alpha_signs"] = {{"-1", alpha_signs->first}, {"5", alpha_signs->second}};
      break;
    case LocalKind::TameDihedral:
      j["m"] = m;
      j["b"] = opt(b);
      j["t"] = opt(t);
      j["M_unramified"] = true;
      break;
    case LocalKind::WildDihedralEll:
      j["m"] = m;
      j["totally_ramified"] = totally_ramified;
      j["regime"] = to_string(regime);
      j["b"] = opt(b);
      j["t"] = opt(t);
      j["M_unramified"] = m_unramified;
      break;
    case LocalKind::DihedralTwoPower:
      j["group_order"] = group_order;
      j["b"] = opt(b);
      j["t"] = opt(t);
      j["M_unramified"] = m_unramified;
      break;
    case LocalKind::PrimitiveA4: j["weil_field"] = "M1"; break;
    case LocalKind::PrimitiveS4: j["variant"] = to_string(variant); break;
  }
  return j;
}

LocalGaloisType LocalGaloisType::from_json(const json& j) {
  LocalGaloisType t;
  try {
    t.kind = parse_enum(j.at("kind").get<std::string>(), kKinds);
    t.p = j.at("p").get<std::uint64_t>();
    t.f = j.value("f", 1);
    t.m = j.value("m", 0);
    t.e = j.value("e", 0);
    t.totally_ramified = j.value("totally_ramified", false);
    t.regime = parse_enum(j.value("regime", std::string("not_applicable")), kRegimes);
    t.group_order = j.value("group_order", 0);
    t.b = opt_int(j, "b");
    t.t = opt_int(j, "t");
    t.m_unramified = j.value("M_unramified", false);
    t.alpha_conductor = opt_int(j, "alpha_conductor");
    if (j.contains("alpha_signs"))
      t.alpha_signs = std::make_pair(j.at("alpha_signs").at("-1").get<int>(), j.at("alpha_signs").at("5").get<int>());
    if (t.kind == LocalKind::PrimitiveS4) t.variant = parse_enum(j.at("variant").get<std::string>(), kVariants);
  } catch (const json::exception& e) {
    throw FormatError(std::string("local type: ") + e.what());
  }
  return t;
}

// ---------------------------------------------------------------------------
// 2-adic fingerprint table

std::vector<WeilFingerprintRow> parse_weil_table(const std::string& text) {
  std::vector<WeilFingerprintRow> rows;
  try {
    const json doc = json::parse(text);
    for (const auto& r : doc.at("rows")) {
      WeilFingerprintRow row;
      row.stem_disc_v2 = r.at("stem_disc_v2").get<int>();
      for (const auto& ef : r.at("cubic_splitting"))
        row.cubic_splitting.emplace_back(ef.at(0).get<int>(), ef.at(1).get<int>());
      std::sort(row.cubic_splitting.begin(), row.cubic_splitting.end());
      row.cubic_disc_v2 = r.at("cubic_disc_v2").get<int>();
      for (const auto& v : r.at("variants"))
        row.variants.push_back(parse_enum(v.get<std::string>(), kVariants));
      row.provenance = r.value("provenance", "");
      rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("weil fingerprint table: ") + e.what());
  }
  return rows;
}

const std::vector<WeilFingerprintRow>& weil_fingerprint_table() {
  static const std::vector<WeilFingerprintRow> table = parse_weil_table(detail::kWeilTableJson);
  return table;
}

// ---------------------------------------------------------------------------
// Decision table over decomposition/inertia pairs

namespace {

using perm::Group;
using perm::Perm;

struct GroupData {
  Group g;
  std::vector<Group> subgroups;
};

const GroupData& group_data(GroupKind kind) {
  static std::once_flag once;
  static GroupData a4, s4, a5;
  std::call_once(once, [] {
    a4.g = perm::alternating(4);
    s4.g = perm::symmetric(4);
    a5.g = perm::alternating(5);
    for (GroupData* d : {&a4, &s4, &a5}) d->subgroups = perm::small_subgroups(d->g);
  });
  switch (kind) {
    case GroupKind::A4: return a4;
    case GroupKind::S4: return s4;
    case GroupKind::A5: return a5;
    default: throw DomainError("no permutation model for group OTHER");
  }
}

std::string group_name(const Group& g) {
  switch (g.size()) {
    case 1: return "1";
    case 2: return "C2";
    case 3: return "C3";
    case 4: return g.is_cyclic() ? "C4" : "V4";
    case 5: return "C5";
    case 6: return "S3";
    case 8: return "D4";
    case 10: return "D5";
    case 12: return "A4";
    case 24: return "S4";
    case 60: return "A5";
  }
  return "G" + std::to_string(g.size());
}

// Action of S4 on the three pair partitions {01|23, 02|13, 03|12}.
Perm on_partitions(const Perm& x) {
  // partition containing {a, b}, numbered by the partner of 0
  auto index = [](int a, int b) { return (a == 0 || b == 0) ? a + b - 1 : 6 - a - b - 1; };
  Perm out(3);
  const int pairs[3][2] = {{0, 1}, {0, 2}, {0, 3}};
  for (int i = 0; i < 3; ++i) out[i] = index(x[pairs[i][0]], x[pairs[i][1]]);
  return out;
}

Group image_on_partitions(const Group& g) {
  Group h;
  h.n = 3;
  for (const auto& x : g.elems) h.elems.insert(on_partitions(x));
  return h;
}

Splitting predicted_splitting(const Group& d, const Group& i) {
  Splitting s;
  for (const auto& orb : perm::orbits(d)) {
    const int e = perm::orbit_size(i, orb.front());
    s.emplace_back(e, static_cast<int>(orb.size()) / e);
  }
  std::sort(s.begin(), s.end());
  return s;
}

bool is_p_power(int n, std::uint64_t p) {
  while (n > 1 && n % static_cast<int>(p) == 0) n /= static_cast<int>(p);
  return n == 1;
}

struct Candidate {
  Group d, i, sylow;
  Splitting stem, cubic;
};

// Pairs (D, I) that can be the decomposition and inertia groups at p:
// I normal in D with normal p-Sylow P, I/P cyclic of order prime to p,
// D/I cyclic generated by a Frobenius acting on I/P as x -> x^p.
std::vector<Candidate> candidates_for(const GroupData& gd, std::uint64_t p) {
  std::vector<Candidate> out;
  const int n = gd.g.n;
  for (const auto& d : gd.subgroups)
    for (const auto& i : gd.subgroups) {
      if (!i.subset_of(d) || !perm::is_normal(i, d)) continue;
      int sylow_order = 1;
      while (i.size() % (sylow_order * static_cast<int>(p)) == 0) sylow_order *= static_cast<int>(p);
      std::vector<Perm> pel;
      for (const auto& x : i.elems)
        if (is_p_power(perm::order(x), p)) pel.push_back(x);
      if (static_cast<int>(pel.size()) != sylow_order) continue;
      Group sylow = perm::generate(n, pel);
      std::optional<Perm> tau;
      for (const auto& x : i.elems) {
        auto gens = pel;
        gens.push_back(x);
        if (perm::generate(n, gens).size() == i.size()) {
          tau = x;
          break;
        }
      }
      if (!tau) continue;
      const Perm tau_p = perm::power(*tau, static_cast<long>(p % perm::order(*tau)));
      bool frobenius = false;
      std::vector<Perm> igens(i.elems.begin(), i.elems.end());
      for (const auto& s : d.elems) {
        auto gens = igens;
        gens.push_back(s);
        if (perm::generate(n, gens).size() != d.size()) continue;
        Perm conj = perm::compose(s, perm::compose(*tau, perm::inverse(s)));
        if (sylow.contains(perm::compose(conj, perm::inverse(tau_p)))) {
          frobenius = true;
          break;
        }
      }
      if (!frobenius) continue;
      Candidate c{d, i, sylow, predicted_splitting(d, i), {}};
      if (n == 4) c.cubic = predicted_splitting(image_on_partitions(d), image_on_partitions(i));
      out.push_back(std::move(c));
    }
  return out;
}

LocalGaloisType shape_of(const Candidate& c, std::uint64_t p) {
  LocalGaloisType t;
  t.p = p;
  const int dsz = c.d.size(), isz = c.i.size();
  const bool wild = isz % static_cast<int>(p) == 0;
  if (isz == 1) {
    t.kind = LocalKind::Unramified;
    t.f = dsz;
  } else if (c.d.is_cyclic()) {
    t.kind = wild ? LocalKind::WildCyclic : LocalKind::TameCyclic;
    t.m = dsz;
    if (!wild) t.e = isz;
  } else if (dsz == 6 || dsz == 10) {
    t.m = dsz / 2;
    if (static_cast<std::uint64_t>(t.m) == p) {
      t.kind = LocalKind::WildDihedralEll;
      t.totally_ramified = isz == dsz;
      t.m_unramified = !t.totally_ramified;
    } else {
      t.kind = LocalKind::TameDihedral;
      t.m_unramified = true;
    }
  } else if (dsz == 4 || dsz == 8) {
    t.kind = LocalKind::DihedralTwoPower;
    t.group_order = dsz;
    if (dsz == 4) {
      t.m_unramified = isz != dsz;
    } else {
      const Group* rot = nullptr;
      Group cyc;
      for (const auto& x : c.d.elems)
        if (perm::order(x) == 4) {
          cyc = perm::generate(c.d.n, {x});
          rot = &cyc;
          break;
        }
      t.m_unramified = rot && c.i.subset_of(*rot);
    }
  } else if (dsz == 12) {
    t.kind = LocalKind::PrimitiveA4;
  } else if (dsz == 24) {
    t.kind = LocalKind::PrimitiveS4;
  } else {
    throw Error(ErrorKind::Domain, "unexpected decomposition group " + group_name(c.d));
  }
  return t;
}

Splitting splitting_of(const PAdicFactorization& s) {
  Splitting out;
  for (const auto& f : s.factors) out.emplace_back(f.e, f.f);
  std::sort(out.begin(), out.end());
  return out;
}

int tame_disc(const Splitting& s, std::uint64_t p) {
  int v = 0;
  for (auto [e, f] : s)
    if (e % static_cast<int>(p) != 0) v += f * (e - 1);
  return v;
}

std::string splitting_text(const Splitting& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(s[i].first) + "," + std::to_string(s[i].second) + ")";
  }
  return out + "}";
}

Regime regime_from_table(int degree, int v3, const PeuTresTable& table) {
  const auto& m = degree == 5 ? table.quintic : table.quartic;
  auto it = m.find(v3);
  if (it == m.end())
    throw UnclassifiedError("unclassified wild regime: v3(stem discriminant) = " + std::to_string(v3) +
                            " for degree " + std::to_string(degree));
  return it->second;
}

WeilVariant lookup_weil(int stem_v2, const Splitting& cubic, int cubic_v2) {
  std::vector<WeilVariant> hits;
  for (const auto& row : weil_fingerprint_table())
    if (row.stem_disc_v2 == stem_v2 && row.cubic_splitting == cubic && row.cubic_disc_v2 == cubic_v2)
      hits = row.variants;
  const std::string fp = "fingerprint (v2 stem disc " + std::to_string(stem_v2) + ", cubic splitting " +
                         splitting_text(cubic) + ", v2 cubic disc " + std::to_string(cubic_v2) + ")";
  if (hits.empty()) throw UnclassifiedError("unclassified 2-adic type: " + fp);
  if (hits.size() > 1) {
    std::string names;
    for (auto v : hits) names += std::string(names.empty() ? "" : ", ") + to_string(v);
    throw AmbiguousError("2-adic type ambiguous between " + names + ": " + fp);
  }
  return hits.front();
}

// Q_2(sqrt d) for the ramified quadratic factor: the local quadratic character
// on units is (-1)^((u-1)/2) at -1 and (-1)^v at 5, with d = 2^v u.
std::pair<int, int> quadratic_signs_2adic(const PAdicFactorization& split) {
  for (const auto& fac : split.factors) {
    if (fac.e != 2 || fac.f != 1 || fac.approximant.degree() != 2) continue;
    const auto& c = fac.approximant.coeffs();
    const Int d = c[1] * c[1] - 4 * c[0] * c[2];
    Int mod = 1;
    mpz_mul_2exp(mod.get_mpz_t(), mod.get_mpz_t(), static_cast<mp_bitcnt_t>(split.precision));
    Int dm = d % mod;
    if (dm < 0) dm += mod;
    if (dm == 0) throw PrecisionError("quadratic factor at 2 not resolved at precision 2^" + std::to_string(split.precision));
    const int v = static_cast<int>(mpz_scan1(dm.get_mpz_t(), 0));
    if (v + 3 > split.precision)
      throw PrecisionError("quadratic factor at 2 not resolved at precision 2^" + std::to_string(split.precision));
    Int u = dm;
    mpz_fdiv_q_2exp(u.get_mpz_t(), dm.get_mpz_t(), static_cast<mp_bitcnt_t>(v));
    const long u8 = mpz_fdiv_ui(u.get_mpz_t(), 8);
    return {u8 % 4 == 3 ? -1 : 1, v % 2 == 1 ? -1 : 1};
  }
  throw InconsistencyError("no ramified quadratic factor at 2");
}

}  // namespace

json LocalAnalysis::to_json() const {
  auto pairs = [](const Splitting& s) {
    json a = json::array();
    for (auto [e, f] : s) a.push_back({{"e", e}, {"f", f}});
    return a;
  };
  json j{{"p", p},
         {"type", type.to_json()},
         {"label", type.label()},
         {"splitting", pairs(splitting)},
         {"disc_valuation", disc_valuation},
         {"candidates", candidates}};
  if (!cubic_splitting.empty()) {
    j["cubic_splitting"] = pairs(cubic_splitting);
    j["cubic_disc_valuation"] = cubic_disc_valuation;
  }
  return j;
}

LocalAnalysis analyze_prime(const ZPoly& f, const GlobalGroup& group, std::uint64_t p,
                            const PeuTresTable& table) {
  if (!group.exceptional()) throw DomainError("local analysis needs an A4, S4 or A5 field");
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  const ZPoly g = f.monic_transform();
  const int n = g.degree();
  LocalAnalysis la;
  la.p = p;
  la.type.p = p;
  const Int P(static_cast<unsigned long>(p));
  const Int disc = discriminant(g);

  if (disc % P != 0) {
    // Unramified: Frobenius cycle type from the factorization mod p.
    std::uint64_t fdeg = 1;
    for (int d : factor_degrees(PrimeFieldPoly(p, g))) {
      fdeg = lcm_u64(fdeg, static_cast<std::uint64_t>(d));
      la.splitting.emplace_back(1, d);
    }
    std::sort(la.splitting.begin(), la.splitting.end());
    la.type.kind = LocalKind::Unramified;
    la.type.f = static_cast<int>(fdeg);
    if (n == 4) {
      for (int d : factor_degrees(PrimeFieldPoly(p, resolvent_cubic(g)))) la.cubic_splitting.emplace_back(1, d);
      std::sort(la.cubic_splitting.begin(), la.cubic_splitting.end());
    }
    la.candidates.push_back("p does not divide disc(f)");
    return la;
  }

  const auto split = padic_splitting(g, p);
  la.splitting = splitting_of(split);
  la.disc_valuation = split.disc_valuation;
  if (n == 4) {
    const auto cs = padic_splitting(resolvent_cubic(g), p);
    la.cubic_splitting = splitting_of(cs);
    la.cubic_disc_valuation = cs.disc_valuation;
  }

  const auto& gd = group_data(group.kind);
  std::vector<std::pair<LocalGaloisType, const Candidate*>> matched;
  static thread_local std::map<std::pair<int, std::uint64_t>, std::vector<Candidate>> cache;
  auto key = std::make_pair(static_cast<int>(group.kind), p);
  if (!cache.count(key)) cache[key] = candidates_for(gd, p);
  for (const auto& c : cache[key]) {
    if (c.stem != la.splitting) continue;
    if (n == 4 && c.cubic != la.cubic_splitting) continue;
    if (c.sylow.size() == 1 && tame_disc(c.stem, p) != la.disc_valuation) continue;
    matched.emplace_back(shape_of(c, p), &c);
  }
  std::set<std::string> labels;
  for (const auto& [t, c] : matched) {
    labels.insert(t.label());
    const std::string line = "D=" + group_name(c->d) + " I=" + group_name(c->i) + " -> " + t.label();
    if (std::find(la.candidates.begin(), la.candidates.end(), line) == la.candidates.end())
      la.candidates.push_back(line);
  }
  if (labels.empty())
    throw InconsistencyError("no decomposition group at p=" + std::to_string(p) + " fits the splitting " +
                             splitting_text(la.splitting));
  if (labels.size() > 1) {
    std::string names;
    for (const auto& l : labels) names += std::string(names.empty() ? "" : ", ") + l;
    throw AmbiguousError("local type at p=" + std::to_string(p) + " ambiguous between " + names);
  }

  LocalGaloisType t = matched.front().first;
  const int wild_part = la.disc_valuation - tame_disc(la.splitting, p);
  switch (t.kind) {
    case LocalKind::WildCyclic:
      if (t.m == static_cast<int>(p) && p != 2) {
        t.alpha_conductor = 2;
      } else if (t.m == 2 && p == 2) {
        int count = 0;
        for (auto [e, ff] : la.splitting)
          if (e == 2) ++count;
        t.alpha_conductor = wild_part / count;
        t.alpha_signs = quadratic_signs_2adic(split);
        const int c = t.alpha_signs->second == -1 ? 3 : 2;
        if (c != *t.alpha_conductor)
          throw InconsistencyError("quadratic character at 2 has conductor exponent " + std::to_string(c) +
                                   " but the discriminant gives " + std::to_string(*t.alpha_conductor));
      }
      break;
    case LocalKind::TameDihedral:
      // beta tamely ramified on the unramified M; Gal(K_p/M) has break 0
      t.b = 1;
      t.t = 0;
      break;
    case LocalKind::DihedralTwoPower:
      if (p != 2) {
        t.b = 1;
        t.t = 0;
      }
      break;
    case LocalKind::WildDihedralEll: {
      // Conductor-discriminant on the degree-p subfield L:
      // v_p(disc L) = v_p(disc M) + f(M) * b, with t = 0 for the tame M.
      const int dm = t.totally_ramified ? 1 : 0, fm = t.totally_ramified ? 1 : 2;
      if ((wild_part - dm) % fm != 0 || wild_part - dm <= 0)
        throw InconsistencyError("wild dihedral discriminant " + std::to_string(wild_part) +
                                 " does not fit the conductor formula");
      t.b = (wild_part - dm) / fm;
      t.t = 0;
      if (p == 3 && t.totally_ramified) t.regime = regime_from_table(n, la.disc_valuation, table);
      break;
    }
    case LocalKind::PrimitiveS4:
      t.variant = lookup_weil(la.disc_valuation, la.cubic_splitting, la.cubic_disc_valuation);
      break;
    default: break;
  }
  if (t.kind == LocalKind::TameCyclic && (p - 1) % static_cast<std::uint64_t>(t.e) != 0)
    throw InconsistencyError("tame cyclic type with p != 1 mod e at p=" + std::to_string(p));
  if (t.kind == LocalKind::TameDihedral && (p + 1) % static_cast<std::uint64_t>(t.m) != 0)
    throw InconsistencyError("tame dihedral type with p != -1 mod m at p=" + std::to_string(p));
  la.type = t;
  return la;
}

LocalGaloisType local_type(const ZPoly& f, const GlobalGroup& group, std::uint64_t p) {
  return analyze_prime(f, group, p).type;
}

LocalGaloisType classify_weil_2adic(const ZPoly& f) {
  if (f.degree() != 4) throw DomainError("classify_weil_2adic needs a quartic");
  const GlobalGroup g = galois_group(f);
  if (g.kind != GroupKind::A4 && g.kind != GroupKind::S4)
    throw DomainError("classify_weil_2adic needs an A4 or S4 quartic");
  const LocalGaloisType t = local_type(f, g, 2);
  if (t.kind != LocalKind::PrimitiveA4 && t.kind != LocalKind::PrimitiveS4)
    throw DomainError("decomposition group at 2 is not primitive: " + t.label());
  return t;
}

Regime classify_peu_tres(const ZPoly& f, std::uint64_t ell, const PeuTresTable& table) {
  if (ell != 3) throw DomainError("peu/tres test is defined at 3 only");
  const GlobalGroup g = galois_group(f);
  const LocalAnalysis la = analyze_prime(f, g, 3, table);
  if (la.type.kind != LocalKind::WildDihedralEll || !la.type.totally_ramified)
    throw DomainError("local type at 3 is " + la.type.label() + ", not totally ramified wild dihedral");
  return regime_from_table(f.degree(), la.disc_valuation, table);
}

Int field_discriminant(const ZPoly& f) {
  const ZPoly g = f.monic_transform();
  const Int d = discriminant(g);
  if (d == 0) throw DomainError("polynomial is not squarefree");
  Int out = sgn(d) < 0 ? Int(-1) : Int(1);
  for (const auto& [p, k] : factor(d)) {
    (void)k;
    const int v = padic_splitting(g, to_u64(p)).disc_valuation;
    for (int i = 0; i < v; ++i) out *= p;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

}  // namespace

json FieldAnalysis::to_json() const {
  json coeffs = json::array();
  for (const auto& c : poly.coeffs()) coeffs.push_back(int_json(c));
  json loc = json::object();
  for (const auto& [p, la] : local) loc[std::to_string(p)] = la.to_json();
  json errs = json::object();
  for (const auto& [p, msg] : local_errors) errs[std::to_string(p)] = msg;
  json j{{"schema_version", 1},
         {"poly", coeffs},
         {"group", group.label()},
         {"non_real", non_real},
         {"irreducibility", irreducibility},
         {"ell", ell},
         {"field_discriminant", supported ? json(field_disc.get_str()) : json(nullptr)},
         {"ramified_primes", ramified_primes},
         {"S", S},
         {"ell_ramified", ell_ramified},
         {"local", loc},
         {"local_errors", errs},
         {"verdict", definitive_negative() ? "negative" : (local_errors.empty() ? "ok" : "partial")}};
  if (!group.reason.empty()) j["group_reason"] = group.reason;
  if (definitive_negative()) j["reason"] = negative_reason;
  return j;
}

FieldAnalysis analyze(const ZPoly& f, std::uint64_t ell) {
  if (ell < 3 || !is_prime(ell)) throw DomainError("ell must be an odd prime");
  FieldAnalysis fa;
  fa.poly = f;
  fa.ell = ell;
  const int n = f.degree();
  if (n != 4 && n != 5) {
    fa.group = {GroupKind::Other, "degree " + std::to_string(n) + " unsupported"};
    fa.negative_reason = "group OTHER (degree " + std::to_string(n) + " unsupported)";
    return fa;
  }
  const auto screen = screen_irreducible(f);
  fa.irreducibility = screen.note;
  fa.group = galois_group(f);
  if (!fa.group.exceptional()) {
    fa.negative_reason = "group OTHER (" + fa.group.reason + ")";
    return fa;
  }
  fa.non_real = is_non_real(f);
  if (!fa.non_real) {
    fa.negative_reason = "totally real field";
    return fa;
  }
  fa.supported = true;
  fa.field_disc = field_discriminant(f);
  for (const auto& p : prime_support(fa.field_disc)) fa.ramified_primes.push_back(to_u64(p));
  for (auto p : fa.ramified_primes) {
    try {
      fa.local[p] = analyze_prime(f, fa.group, p);
    } catch (const Error& e) {
      fa.local_errors[p] = std::string(to_string(e.kind())) + ": " + e.what();
    }
    if (p == ell) {
      fa.ell_ramified = true;
      continue;
    }
    if (fa.S > UINT64_MAX / p) throw DomainError("S does not fit in 64 bits");
    fa.S *= p;
  }
  if (!fa.ell_ramified) {
    fa.negative_reason = "ell unramified in K: the weight set is empty (weight 1 regime)";
  }
  return fa;
}

}  // namespace exc
