#pragma once

#include "character.hpp"
#include "local.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace exc {

struct WeightSet {
  std::set<int> values;
  std::optional<std::pair<std::set<int>, std::set<int>>> partition;  // (plus, minus)
  std::set<int> outside_window;  // members not in [2, ell - 1]

  bool empty() const { return values.empty(); }
  bool contains(int k) const { return values.count(k) > 0; }
  nlohmann::json to_json() const;
  friend bool operator==(const WeightSet&, const WeightSet&) = default;
};

WeightSet weight_set(const LocalGaloisType& at_ell, std::uint64_t ell);

/// Determinant character on U_p of the chosen local lift (before reduction).
DirichletChar epsilon_p(const LocalGaloisType& t, std::uint64_t p);
/// Conductor exponent of the local lift twisted by phi (a character of U_p).
int n_p(const LocalGaloisType& t, const DirichletChar& phi);
int delta_p(const LocalGaloisType& t, const DirichletChar& phi, std::uint64_t ell);

struct TwistWitness {
  std::map<std::uint64_t, DirichletChar> phi;  // prime -> primitive character of U_p
  nlohmann::json to_json() const;
};

struct SerreTypeFamily {
  std::vector<TwistWitness> twists;
  Int N = 1;
  WeightSet weights;
  ModLChar nu;
  bool sign_indeterminate = false;
  bool partial = false;
  std::vector<std::string> errors;  // set when partial
  std::vector<std::string> notes;
  nlohmann::json to_json() const;
};

struct SerreTypes {
  std::uint64_t ell = 0;
  std::vector<SerreTypeFamily> families;
  WeightSet weights;
  std::vector<std::string> notes;
  bool partial() const;
  nlohmann::json to_json() const;
};

/// Conductor bound per prime of S; primes missing from the map use `fallback`.
SerreTypes enumerate_serre_types(const FieldAnalysis& analysis, std::uint64_t ell,
                                 const std::map<std::uint64_t, int>& bounds, int fallback = 0);

/// Recompute N and nu for one twist tuple.
struct TwistEvaluation {
  Int N = 1;
  ModLChar nu;
  std::vector<std::string> errors;
};
TwistEvaluation evaluate_twist(const FieldAnalysis& analysis, std::uint64_t ell, const TwistWitness& w);

/// (N m^2, k, nu phi^2) for a character phi of conductor m prime to ell and to
/// every prime ramified in K.
SerreTypeFamily auxiliary_twist(const SerreTypeFamily& family, const DirichletChar& phi,
                                const std::vector<std::uint64_t>& ramified_primes);

enum class Variant2 { Unramified, M2, M3, M4 };
const char* to_string(Variant2 v);
Variant2 parse_variant2(const std::string& s);

struct CorollaryRow {
  int n = 0;
  DirichletChar epsilon;
};
CorollaryRow corollary_table(Variant2 v, int c);

}  // namespace exc
