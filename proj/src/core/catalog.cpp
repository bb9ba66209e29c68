#include "catalog.hpp"

#include "errors.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace exc {

using nlohmann::json;

namespace {

json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json poly_json(const ZPoly& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(int_json(c));
  return a;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Commas inside quotes or brackets do not separate fields.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, had_quote = false;
  int depth = 0;
  auto finish = [&] {
    // quoted fields keep their padding
    out.push_back(had_quote ? cur : trim(cur));
    cur.clear();
    had_quote = false;
  };
  for (size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
      continue;
    }
    if (ch == '"') {
      if (!had_quote) cur = trim(cur);
      quoted = had_quote = true;
    } else if (ch == '[') {
      ++depth;
      cur += ch;
    } else if (ch == ']') {
      --depth;
      cur += ch;
    } else if (ch == ',' && depth == 0) {
      finish();
    } else if (!(had_quote && (ch == ' ' || ch == '\t' || ch == '\r'))) {
      cur += ch;
    }
  }
  if (quoted) throw FormatError("unterminated quote");
  finish();
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"[]\n") == std::string::npos && trim(s) == s) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Int parse_int(const std::string& s, const char* what) {
  Int v;
  const std::string t = trim(s);
  if (t.empty() || v.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0)
    throw FormatError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

std::vector<std::uint64_t> parse_primes(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    out.push_back(to_u64(parse_int(tok, "prime")));
  }
  return out;
}

FieldRecord validate(std::string label, const std::string& degree, const ZPoly& poly, std::string group,
                     const Int& disc, std::vector<std::uint64_t> primes) {
  FieldRecord r;
  r.label = std::move(label);
  if (r.label.empty()) throw FormatError("empty label");
  r.degree = static_cast<int>(to_i64(parse_int(degree, "degree")));
  if (r.degree != 4 && r.degree != 5) throw FormatError("degree out of range");
  r.poly = poly;
  if (poly.degree() != r.degree) throw FormatError("degree does not match the polynomial");
  r.group_label = std::move(group);
  if (disc == 0) throw FormatError("zero discriminant");
  r.discriminant = disc;
  std::sort(primes.begin(), primes.end());
  std::vector<std::uint64_t> support;
  for (const auto& p : prime_support(disc)) support.push_back(to_u64(p));
  if (primes != support) throw FormatError("ramified primes do not match the discriminant");
  r.ramified_primes = std::move(primes);
  return r;
}

const char* const kColumns[] = {"label", "degree", "coeffs", "group_label", "discriminant", "ramified_primes"};

}  // namespace

json FieldRecord::to_json() const {
  return {{"label", label},
          {"degree", degree},
          {"coeffs", poly_json(poly)},
          {"group_label", group_label},
          {"discriminant", discriminant.get_str()},
          {"ramified_primes", ramified_primes}};
}

CatalogFormat parse_format(const std::string& s) {
  if (s == "csv") return CatalogFormat::Csv;
  if (s == "json-lines" || s == "jsonl") return CatalogFormat::JsonLines;
  throw FormatError("unknown catalog format '" + s + "'");
}

Catalog parse_catalog(std::istream& in, CatalogFormat format) {
  if (!in.good() && !in.eof()) throw IoError("catalog stream is not readable");
  Catalog cat;
  std::string line;
  int lineno = 0, rows = 0;
  std::vector<int> column(6, -1);
  bool have_header = format == CatalogFormat::JsonLines;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    if (!have_header) {
      const auto cols = split_csv(line);
      for (size_t i = 0; i < 6; ++i) {
        auto it = std::find(cols.begin(), cols.end(), kColumns[i]);
        if (it == cols.end())
          throw FormatError("catalog header lacks column '" + std::string(kColumns[i]) + "' (line " +
                            std::to_string(lineno) + ")");
        column[i] = static_cast<int>(it - cols.begin());
      }
      have_header = true;
      continue;
    }
    ++rows;
    try {
      if (format == CatalogFormat::Csv) {
        const auto f = split_csv(line);
        if (f.size() != 6) throw FormatError("expected 6 fields, found " + std::to_string(f.size()));
        auto col = [&](int i) { return f[static_cast<size_t>(column[static_cast<size_t>(i)])]; };
        cat.records.push_back(validate(col(0), col(1), ZPoly::parse(col(2)), col(3), parse_int(col(4), "discriminant"),
                                       parse_primes(col(5))));
      } else {
        json j;
        try {
          j = json::parse(line);
        } catch (const json::exception&) {
          throw FormatError("line is not a JSON object");
        }
        if (!j.is_object()) throw FormatError("line is not a JSON object");
        for (const char* key : kColumns)
          if (!j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
        auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
        std::vector<std::uint64_t> primes;
        const json& rp = j.at("ramified_primes");
        if (rp.is_array()) {
          for (const auto& p : rp) primes.push_back(to_u64(parse_int(text(p), "prime")));
        } else {
          primes = parse_primes(text(rp));
        }
        cat.records.push_back(validate(text(j.at("label")), text(j.at("degree")), ZPoly::parse(j.at("coeffs").dump()),
                                       text(j.at("group_label")), parse_int(text(j.at("discriminant")), "discriminant"),
                                       primes));
      }
    } catch (const Error& e) {
      cat.rejects.push_back({lineno, e.what()});
    }
  }
  if (in.bad()) throw IoError("error while reading the catalog stream");
  if (rows > 0 && 2 * static_cast<int>(cat.rejects.size()) > rows)
    throw FormatError("format mismatch: " + std::to_string(cat.rejects.size()) + " of " + std::to_string(rows) +
                      " rows rejected (first: line " + std::to_string(cat.rejects.front().line) + ": " +
                      cat.rejects.front().reason + ")");
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open catalog '" + path + "'");
  const bool jl = path.size() >= 6 && (path.ends_with(".jsonl") || path.ends_with(".ndjson"));
  return parse_catalog(in, jl ? CatalogFormat::JsonLines : CatalogFormat::Csv);
}

std::string serialize_catalog(const std::vector<FieldRecord>& records, CatalogFormat format) {
  std::ostringstream os;
  if (format == CatalogFormat::Csv) {
    os << "label,degree,coeffs,group_label,discriminant,ramified_primes\n";
    for (const auto& r : records) {
      std::string primes;
      for (auto p : r.ramified_primes) primes += (primes.empty() ? "" : ";") + std::to_string(p);
      os << csv_quote(r.label) << "," << r.degree << "," << csv_quote(poly_json(r.poly).dump()) << "," << csv_quote(r.group_label)
         << "," << r.discriminant.get_str() << "," << primes << "\n";
    }
  } else {
    for (const auto& r : records) os << r.to_json().dump() << "\n";
  }
  return os.str();
}

const std::vector<FieldRecord>& builtin_corpus() {
  static const std::vector<FieldRecord> corpus = [] {
    const struct {
      const char* label;
      ZPoly f;
      const char* group;
    } rows[] = {{"s4.59", {3, 11, -7, -1, 1}, "S4"},
                {"s4.2-11", {-13, 16, -4, -2, 1}, "S4"},
                {"s4.2-19", {-2, -6, -2, -1, 1}, "S4"},
                {"a5.3-23", {9, 0, 6, 3, 0, 1}, "A5"}};
    std::vector<FieldRecord> out;
    for (const auto& r : rows) {
      FieldRecord rec;
      rec.label = r.label;
      rec.degree = r.f.degree();
      rec.poly = r.f;
      rec.group_label = r.group;
      rec.discriminant = field_discriminant(r.f);
      for (const auto& p : prime_support(rec.discriminant)) rec.ramified_primes.push_back(to_u64(p));
      out.push_back(std::move(rec));
    }
    return out;
  }();
  return corpus;
}

// ---------------------------------------------------------------------------

FilterResult filter_candidates(const std::vector<FieldRecord>& catalog, std::uint64_t ell, const Int& N) {
  FilterResult out;
  for (const auto& r : catalog) {
    std::string reason;
    for (auto p : r.ramified_primes) {
      const Int P(static_cast<unsigned long>(p));
      if (p != ell && N % P != 0) {
        reason = "ramified at " + std::to_string(p) + ", which divides neither N nor ell";
        break;
      }
    }
    if (reason.empty()) {
      try {
        const GlobalGroup g = galois_group(r.poly);
        if (!g.exceptional()) {
          reason = "group OTHER (" + g.reason + ")";
        } else if (!is_non_real(r.poly)) {
          reason = "totally real field";
        } else if (g.label() != r.group_label) {
          out.warnings.push_back(r.label + ": catalog group label " + r.group_label + " corrected to " + g.label());
        }
      } catch (const Error& e) {
        reason = std::string(to_string(e.kind())) + ": " + e.what();
      }
    }
    if (reason.empty()) {
      out.candidates.push_back(r);
    } else {
      out.rejected.push_back({r.label, reason});
    }
  }
  return out;
}

const char* to_string(MatchQuality q) {
  switch (q) {
    case MatchQuality::Exact: return "exact";
    case MatchQuality::UpToSign: return "up_to_sign";
    case MatchQuality::Partial: return "partial";
  }
  return "?";
}

json DetectionQuery::to_json() const {
  return {{"N", int_json(N)}, {"k", k}, {"nu", nu.to_json()}, {"ell", ell}};
}

json DetectionReport::to_json() const {
  json m = json::array();
  for (const auto& x : matches) {
    json fam = x.family.to_json();
    m.push_back({{"label", x.record.label},
                 {"record", x.record.to_json()},
                 {"quality", to_string(x.quality)},
                 {"family", fam},
                 {"notes", x.notes}});
  }
  auto rows = [](const std::vector<CandidateRejection>& v) {
    json a = json::array();
    for (const auto& n : v) a.push_back({{"label", n.label}, {"reason", n.reason}});
    return a;
  };
  return {{"query", query.to_json()},
          {"matches", m},
          {"negatives", rows(negatives)},
          {"skipped", rows(skipped)},
          {"notes", notes}};
}

int twist_bound(const LocalGaloisType& t, std::uint64_t ell, int vN) {
  int best = 0;
  for (int c = 1; c <= vN + 1; ++c) {
    std::vector<LocalTwist> tw;
    for (auto& x : enumerate_local_twists(t.p, c, ell))
      if (x.c == c) tw.push_back(std::move(x));
    if (tw.empty()) continue;
    int mn = INT32_MAX;
    for (const auto& x : tw) {
      try {
        mn = std::min(mn, n_p(t, x.phi));
      } catch (const ExternalReferenceError&) {
        mn = std::min(mn, c);
      }
    }
    if (mn - 1 > vN) break;
    best = c;
  }
  return best;
}

namespace {

struct RecordOutcome {
  std::optional<DetectionMatch> match;
  std::optional<CandidateRejection> negative;
  std::optional<CandidateRejection> skipped;
};

RecordOutcome detect_one(const DetectionQuery& q, const FieldRecord& r) {
  RecordOutcome out;
  try {
    const FieldAnalysis a = analyze(r.poly, q.ell);
    if (a.definitive_negative()) {
      out.negative = CandidateRejection{r.label, a.negative_reason};
      return out;
    }
    std::map<std::uint64_t, int> bounds;
    for (auto p : a.ramified_primes) {
      if (p == q.ell) continue;
      const int v = valuation(q.N, Int(static_cast<unsigned long>(p)));
      auto it = a.local.find(p);
      bounds[p] = it == a.local.end() ? v + 1 : twist_bound(it->second.type, q.ell, v);
    }
    const SerreTypes st = enumerate_serre_types(a, q.ell, bounds);
    if (!st.weights.contains(q.k)) {
      std::string ws;
      for (int k : st.weights.values) ws += (ws.empty() ? "" : ",") + std::to_string(k);
      out.negative = CandidateRejection{r.label, "weight " + std::to_string(q.k) + " not in W = {" + ws + "}"};
      return out;
    }
    for (const auto& f : st.families) {
      if (!f.partial) {
        if (f.N == q.N && equivalent(f.nu.chi, q.nu)) {
          DetectionMatch m{r, f, f.weights.partition ? MatchQuality::UpToSign : MatchQuality::Exact, f.notes};
          out.match = std::move(m);
          return out;
        }
      } else if (q.N % f.N == 0 && !out.match) {
        out.match = DetectionMatch{r, f, MatchQuality::Partial, f.notes};
      }
    }
    if (out.match) return out;
    std::string reason = "no family with N = " + q.N.get_str() + " and the given nu";
    for (const auto& [P, v] : factor(q.N)) {
      const auto p = to_u64(P);
      if (!std::binary_search(a.ramified_primes.begin(), a.ramified_primes.end(), p))
        reason += " (K is unramified at " + std::to_string(p) + "; twists there are not enumerated)";
    }
    out.negative = CandidateRejection{r.label, reason};
  } catch (const Error& e) {
    out.skipped = CandidateRejection{r.label, std::string(to_string(e.kind())) + ": " + e.what()};
  }
  return out;
}

}  // namespace

DetectionReport detect(const DetectionQuery& q, const std::vector<FieldRecord>& catalog) {
  if (q.ell < 3 || !is_prime(q.ell)) throw DomainError("ell must be an odd prime");
  if (q.N < 1) throw DomainError("N must be positive");
  if (q.N % Int(static_cast<unsigned long>(q.ell)) == 0) throw DomainError("N must be prime to ell");
  if (q.k < 2 || static_cast<std::uint64_t>(q.k) > q.ell - 1) throw DomainError("k must satisfy 2 <= k <= ell - 1");
  if (q.nu.order() % q.ell == 0) throw DomainError("nu must have order prime to ell");
  if (q.N % Int(static_cast<unsigned long>(q.nu.conductor())) != 0)
    throw DomainError("the conductor of nu does not divide N");

  DetectionReport rep;
  rep.query = q;
  rep.notes.push_back("candidates are searched in the supplied catalog; completeness depends on the catalog");
  FilterResult fr = filter_candidates(catalog, q.ell, q.N);
  rep.negatives = fr.rejected;
  rep.notes.insert(rep.notes.end(), fr.warnings.begin(), fr.warnings.end());

  std::vector<RecordOutcome> results(fr.candidates.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < results.size(); i = next++) results[i] = detect_one(q, fr.candidates[i]);
  };
  const size_t nthreads = std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()), results.size());
  std::vector<std::thread> pool;
  for (size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& r : results) {
    if (r.match) rep.matches.push_back(std::move(*r.match));
    if (r.negative) rep.negatives.push_back(std::move(*r.negative));
    if (r.skipped) rep.skipped.push_back(std::move(*r.skipped));
  }
  std::stable_sort(rep.matches.begin(), rep.matches.end(),
                   [](const DetectionMatch& a, const DetectionMatch& b) { return a.record.label < b.record.label; });
  auto by_label = [](const CandidateRejection& a, const CandidateRejection& b) { return a.label < b.label; };
  std::stable_sort(rep.negatives.begin(), rep.negatives.end(), by_label);
  std::stable_sort(rep.skipped.begin(), rep.skipped.end(), by_label);
  return rep;
}

}  // namespace exc
