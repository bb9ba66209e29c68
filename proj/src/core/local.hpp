#pragma once

#include "galois.hpp"
#include "padic.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace exc {

enum class LocalKind {
  Unramified,
  TameCyclic,
  WildCyclic,
  TameDihedral,
  WildDihedralEll,
  DihedralTwoPower,
  PrimitiveA4,
  PrimitiveS4
};

enum class Regime { NotApplicable, Peu, Tres };
enum class WeilVariant { M2, M3, M4 };

const char* to_string(LocalKind k);
const char* to_string(Regime r);
const char* to_string(WeilVariant v);

/// Type of the decomposition group at a prime.
///
/// Field usage by kind:
///   Unramified        f
///   TameCyclic        m, e
///   WildCyclic        m, alpha_conductor (when determined)
///   TameDihedral      m (M unramified, b = 1, t = 0)
///   WildDihedralEll   m (= p), totally_ramified, regime, b, t, m_unramified
///   DihedralTwoPower  group_order, m_unramified, b and t (tame only)
///   PrimitiveS4       variant
struct LocalGaloisType {
  LocalKind kind = LocalKind::Unramified;
  std::uint64_t p = 0;
  int f = 1;
  int m = 0;
  int e = 0;
  bool totally_ramified = false;
  Regime regime = Regime::NotApplicable;
  int group_order = 0;
  std::optional<int> b;
  std::optional<int> t;
  bool m_unramified = false;
  std::optional<int> alpha_conductor;
  // WildCyclic C2 at 2: values of the quadratic character on -1 and 5
  std::optional<std::pair<int, int>> alpha_signs;
  WeilVariant variant = WeilVariant::M4;

  /// Degree [K_p : Q_p].
  int local_degree() const;
  bool tame() const;
  std::string label() const;
  nlohmann::json to_json() const;
  static LocalGaloisType from_json(const nlohmann::json& j);
  friend bool operator==(const LocalGaloisType& a, const LocalGaloisType& b) {
    return a.to_json() == b.to_json();
  }
};

/// Valuation thresholds for the peu/tres ramifie test at 3, keyed on
/// v_3 of the stem field discriminant.
struct PeuTresTable {
  std::map<int, Regime> quintic{{4, Regime::Peu}, {6, Regime::Tres}};
  std::map<int, Regime> quartic{{3, Regime::Peu}, {5, Regime::Tres}};
};

/// One row of the 2-adic fingerprint table for S4 quartics.
struct WeilFingerprintRow {
  int stem_disc_v2;
  std::vector<std::pair<int, int>> cubic_splitting;  // (e, f), sorted
  int cubic_disc_v2;
  std::vector<WeilVariant> variants;
  std::string provenance;
};

const std::vector<WeilFingerprintRow>& weil_fingerprint_table();
std::vector<WeilFingerprintRow> parse_weil_table(const std::string& json_text);

struct LocalAnalysis {
  std::uint64_t p = 0;
  LocalGaloisType type;
  std::vector<std::pair<int, int>> splitting;        // stem (e, f), sorted
  std::vector<std::pair<int, int>> cubic_splitting;  // quartics only
  int disc_valuation = 0;                            // v_p(stem field discriminant)
  int cubic_disc_valuation = 0;
  std::vector<std::string> candidates;  // decomposition/inertia pairs that matched
  nlohmann::json to_json() const;
};

/// Full local analysis at p with the decision table made explicit.
LocalAnalysis analyze_prime(const ZPoly& f, const GlobalGroup& group, std::uint64_t p,
                            const PeuTresTable& table = {});

LocalGaloisType local_type(const ZPoly& f, const GlobalGroup& group, std::uint64_t p);

/// 2-adic type of an A4/S4 quartic whose decomposition group at 2 is primitive.
LocalGaloisType classify_weil_2adic(const ZPoly& f);

Regime classify_peu_tres(const ZPoly& f, std::uint64_t ell, const PeuTresTable& table = {});

/// Signed discriminant of the stem field Q[x]/(f).
Int field_discriminant(const ZPoly& f);

struct FieldAnalysis {
  ZPoly poly;
  GlobalGroup group;
  bool non_real = false;
  std::string irreducibility;  // screen note
  std::uint64_t ell = 0;
  Int field_disc;
  std::vector<std::uint64_t> ramified_primes;
  std::map<std::uint64_t, LocalAnalysis> local;
  std::map<std::uint64_t, std::string> local_errors;  // prime -> "<kind>: message"
  std::uint64_t S = 1;
  bool ell_ramified = false;
  bool supported = false;  // exceptional group, non-real
  std::string negative_reason;

  bool definitive_negative() const { return !negative_reason.empty(); }
  nlohmann::json to_json() const;
};

FieldAnalysis analyze(const ZPoly& f, std::uint64_t ell);

}  // namespace exc
