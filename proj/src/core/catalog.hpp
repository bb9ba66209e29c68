#pragma once

#include "recipe.hpp"

#include "json.hpp"

#include <istream>
#include <string>
#include <vector>

namespace exc {

struct FieldRecord {
  std::string label;
  int degree = 0;
  ZPoly poly;
  std::string group_label;
  Int discriminant;
  std::vector<std::uint64_t> ramified_primes;

  nlohmann::json to_json() const;
  friend bool operator==(const FieldRecord& a, const FieldRecord& b) {
    return a.label == b.label && a.degree == b.degree && a.poly == b.poly && a.group_label == b.group_label &&
           a.discriminant == b.discriminant && a.ramified_primes == b.ramified_primes;
  }
};

enum class CatalogFormat { Csv, JsonLines };
CatalogFormat parse_format(const std::string& s);

struct Reject {
  int line = 0;
  std::string reason;
};

struct Catalog {
  std::vector<FieldRecord> records;
  std::vector<Reject> rejects;
};

/// Throws IoError for a bad stream and FormatError when more than half of the
/// data rows are rejected.
Catalog parse_catalog(std::istream& in, CatalogFormat format);
Catalog load_catalog(const std::string& path);  // format from extension (.jsonl/.ndjson, else csv)
std::string serialize_catalog(const std::vector<FieldRecord>& records, CatalogFormat format);

/// The four fields used throughout the tests and documentation.
const std::vector<FieldRecord>& builtin_corpus();

struct CandidateRejection {
  std::string label;
  std::string reason;
};

struct FilterResult {
  std::vector<FieldRecord> candidates;
  std::vector<CandidateRejection> rejected;
  std::vector<std::string> warnings;  // advisory group labels that disagree with galois_group
};

FilterResult filter_candidates(const std::vector<FieldRecord>& catalog, std::uint64_t ell, const Int& N);

enum class MatchQuality { Exact, UpToSign, Partial };
const char* to_string(MatchQuality q);

struct DetectionQuery {
  Int N;
  int k = 0;
  DirichletChar nu;  // character mod N (or any modulus dividing N)
  std::uint64_t ell = 0;
  nlohmann::json to_json() const;
};

struct DetectionMatch {
  FieldRecord record;
  SerreTypeFamily family;
  MatchQuality quality = MatchQuality::Exact;
  std::vector<std::string> notes;
};

struct DetectionReport {
  DetectionQuery query;
  std::vector<DetectionMatch> matches;
  std::vector<CandidateRejection> negatives;
  std::vector<CandidateRejection> skipped;  // analysis failed
  std::vector<std::string> notes;
  nlohmann::json to_json() const;
};

/// Largest conductor exponent c at p with n_p(c) - 1 <= v_p(N) (twist bound).
int twist_bound(const LocalGaloisType& t, std::uint64_t ell, int vN);

DetectionReport detect(const DetectionQuery& query, const std::vector<FieldRecord>& catalog);

}  // namespace exc
