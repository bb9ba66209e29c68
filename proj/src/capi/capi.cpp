#include "exc/exc.h"

#include "catalog.hpp"
#include "embed.hpp"
#include "errors.hpp"

#include <memory>
#include <string>

using nlohmann::json;

struct exc_context {
  std::string last_error;
};

struct exc_result {
  std::string text;
  int verdict = EXC_VERDICT_DEFINITIVE;
};

namespace {

exc_status status_of(exc::ErrorKind k) {
  switch (k) {
    case exc::ErrorKind::Domain: return EXC_E_DOMAIN;
    case exc::ErrorKind::Precision: return EXC_E_PRECISION;
    case exc::ErrorKind::Ambiguous: return EXC_E_AMBIGUOUS;
    case exc::ErrorKind::ExternalReference: return EXC_E_EXTERNAL_REFERENCE;
    case exc::ErrorKind::Inconsistency: return EXC_E_INCONSISTENCY;
    case exc::ErrorKind::Unclassified: return EXC_E_UNCLASSIFIED;
    case exc::ErrorKind::Format: return EXC_E_FORMAT;
    case exc::ErrorKind::Io: return EXC_E_IO;
  }
  return EXC_E_INTERNAL;
}

struct BadArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
exc_status guarded(exc_context* ctx, exc_result** out, F&& body) {
  if (!ctx) return EXC_E_INVALID_ARGUMENT;
  ctx->last_error.clear();
  if (!out) {
    ctx->last_error = "null result pointer";
    return EXC_E_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    auto res = std::make_unique<exc_result>();
    json j = body(res->verdict);
    res->text = j.dump(2);
    *out = res.release();
    return EXC_OK;
  } catch (const exc::Error& e) {
    ctx->last_error = e.what();
    return status_of(e.kind());
  } catch (const BadArgument& e) {
    ctx->last_error = e.what();
    return EXC_E_INVALID_ARGUMENT;
  } catch (const json::exception& e) {
    ctx->last_error = std::string("malformed JSON: ") + e.what();
    return EXC_E_FORMAT;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return EXC_E_INTERNAL;
  }
}

exc::ZPoly poly_arg(const char* s) {
  if (!s) throw BadArgument("polynomial is null");
  return exc::ZPoly::parse(s);
}

json poly_json(const exc::ZPoly& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(c.fits_slong_p() ? json(c.get_si()) : json(c.get_str()));
  return a;
}

exc::DirichletChar nu_arg(const char* s) {
  if (!s || std::string(s) == "trivial") return exc::DirichletChar(1);
  return exc::DirichletChar::from_json(json::parse(s));
}

json char_values(const exc::DirichletChar& eps) {
  // values on -1 and 5 as signs, for the 2-adic rows
  json v = json::object();
  for (long r : {-1L, 5L}) {
    const exc::Rat x = eps.value(r);
    v[std::to_string(r)] = x == 0 ? 1 : (x == exc::Rat(1, 2) ? -1 : 0);
  }
  return v;
}

json corollary_row(exc::Variant2 v, int c) {
  const exc::CorollaryRow row = exc::corollary_table(v, c);
  return {{"variant", exc::to_string(v)},
          {"c", c},
          {"n", row.n},
          {"epsilon", row.epsilon.to_json()},
          {"epsilon_values", char_values(row.epsilon)}};
}

}  // namespace

extern "C" {

const char* exc_version(void) { return "1.0.0"; }

const char* exc_status_name(exc_status s) {
  switch (s) {
    case EXC_OK: return "ok";
    case EXC_E_DOMAIN: return "domain";
    case EXC_E_PRECISION: return "precision";
    case EXC_E_AMBIGUOUS: return "ambiguous";
    case EXC_E_EXTERNAL_REFERENCE: return "external_reference";
    case EXC_E_INCONSISTENCY: return "inconsistency";
    case EXC_E_UNCLASSIFIED: return "unclassified";
    case EXC_E_FORMAT: return "format";
    case EXC_E_IO: return "io";
    case EXC_E_INVALID_ARGUMENT: return "invalid_argument";
    case EXC_E_INTERNAL: return "internal";
  }
  return "unknown";
}

exc_context* exc_context_new(void) { return new (std::nothrow) exc_context(); }
void exc_context_free(exc_context* ctx) { delete ctx; }
const char* exc_last_error(const exc_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

exc_status exc_analyze(exc_context* ctx, const char* poly, uint64_t ell, exc_result** out) {
  return guarded(ctx, out, [&](int& verdict) {
    const exc::FieldAnalysis a = exc::analyze(poly_arg(poly), ell);
    if (a.definitive_negative()) {
      verdict = EXC_VERDICT_NEGATIVE;
    } else if (!a.local_errors.empty()) {
      verdict = EXC_VERDICT_PARTIAL;
    }
    return a.to_json();
  });
}

exc_status exc_serre_types(exc_context* ctx, const char* poly, uint64_t ell, int twist_bound, exc_result** out) {
  return guarded(ctx, out, [&](int& verdict) {
    if (twist_bound < 0) throw BadArgument("twist bound must be non-negative");
    const exc::ZPoly f = poly_arg(poly);
    const exc::FieldAnalysis a = exc::analyze(f, ell);
    json j;
    j["schema_version"] = 1;
    j["poly"] = poly_json(f);
    j["group"] = a.group.label();
    j["twist_bound"] = twist_bound;
    if (a.definitive_negative()) {
      verdict = EXC_VERDICT_NEGATIVE;
      j["ell"] = ell;
      j["families"] = json::array();
      j["reason"] = a.negative_reason;
      j["verdict"] = "negative";
      return j;
    }
    const exc::SerreTypes st = exc::enumerate_serre_types(a, ell, {}, twist_bound);
    j.update(st.to_json());
    verdict = st.partial() ? EXC_VERDICT_PARTIAL : EXC_VERDICT_DEFINITIVE;
    j["verdict"] = st.partial() ? "partial" : "ok";
    return j;
  });
}

exc_status exc_detect(exc_context* ctx, const char* level, int k, const char* nu, uint64_t ell,
                      const char* catalog_path, exc_result** out) {
  return guarded(ctx, out, [&](int& verdict) {
    if (!level) throw BadArgument("level is null");
    exc::DetectionQuery q;
    if (q.N.set_str(level, 10) != 0) throw BadArgument(std::string("bad level '") + level + "'");
    q.k = k;
    q.ell = ell;
    q.nu = nu_arg(nu);
    json j;
    exc::DetectionReport rep;
    if (catalog_path) {
      const exc::Catalog cat = exc::load_catalog(catalog_path);
      rep = exc::detect(q, cat.records);
      j = rep.to_json();
      json rej = json::array();
      for (const auto& r : cat.rejects) rej.push_back({{"line", r.line}, {"reason", r.reason}});
      j["catalog"] = {{"source", catalog_path}, {"records", cat.records.size()}, {"rejects", rej}};
    } else {
      rep = exc::detect(q, exc::builtin_corpus());
      j = rep.to_json();
      j["catalog"] = {{"source", "builtin"}, {"records", exc::builtin_corpus().size()}, {"rejects", json::array()}};
    }
    j["schema_version"] = 1;
    bool full = false, partial = false;
    for (const auto& m : rep.matches) (m.quality == exc::MatchQuality::Partial ? partial : full) = true;
    if (!full) verdict = (partial || !rep.skipped.empty()) ? EXC_VERDICT_PARTIAL : EXC_VERDICT_NEGATIVE;
    j["verdict"] = verdict == EXC_VERDICT_DEFINITIVE ? "ok" : verdict == EXC_VERDICT_PARTIAL ? "partial" : "negative";
    return j;
  });
}

exc_status exc_local(exc_context* ctx, const char* poly, uint64_t p, exc_result** out) {
  return guarded(ctx, out, [&](int& verdict) {
    const exc::ZPoly f = poly_arg(poly);
    if (!exc::is_prime(p)) throw exc::DomainError("p must be prime");
    const exc::GlobalGroup g = exc::galois_group(f);
    json j;
    j["schema_version"] = 1;
    j["poly"] = poly_json(f);
    j["group"] = g.label();
    j["p"] = p;
    if (!g.exceptional()) {
      verdict = EXC_VERDICT_NEGATIVE;
      j["reason"] = "group OTHER (" + g.reason + ")";
      j["verdict"] = "negative";
      return j;
    }
    j["analysis"] = exc::analyze_prime(f, g, p).to_json();
    j["verdict"] = "ok";
    return j;
  });
}

exc_status exc_corollary1(exc_context* ctx, const char* variant, int c, exc_result** out) {
  return guarded(ctx, out, [&](int&) {
    std::vector<exc::Variant2> vs;
    if (variant) {
      vs.push_back(exc::parse_variant2(variant));
    } else {
      vs = {exc::Variant2::Unramified, exc::Variant2::M2, exc::Variant2::M3, exc::Variant2::M4};
    }
    json rows = json::array();
    for (auto v : vs) {
      if (c >= 0) {
        rows.push_back(corollary_row(v, c));
        continue;
      }
      // one row per regime; n is given by its formula
      auto regime = [&](const char* name, int sample, const char* n) {
        json r = corollary_row(v, sample);
        r.erase("c");
        r["regime"] = name;
        r["n"] = n;
        rows.push_back(r);
      };
      switch (v) {
        case exc::Variant2::Unramified: regime("c >= 0", 0, "2c"); break;
        case exc::Variant2::M2:
        case exc::Variant2::M3:
          regime("c <= 3", 0, "7");
          regime("c >= 4", 4, "2c");
          break;
        case exc::Variant2::M4:
          regime("c <= 1", 0, "3");
          regime("c >= 2", 2, "2c");
          break;
      }
    }
    return json{{"schema_version", 1}, {"rows", rows}, {"verdict", "ok"}};
  });
}

exc_status exc_embed_check(exc_context* ctx, uint64_t ell, int m, exc_result** out) {
  return guarded(ctx, out, [&](int& verdict) {
    if (m < 0) throw BadArgument("m must be non-negative");
    json j = exc::embed_check(ell, m);
    j["schema_version"] = 1;
    if (!j.at("ok").get<bool>()) verdict = EXC_VERDICT_NEGATIVE;
    j["verdict"] = j.at("ok").get<bool>() ? "ok" : "negative";
    return j;
  });
}

const char* exc_result_json(const exc_result* res) { return res ? res->text.c_str() : ""; }
int exc_result_verdict(const exc_result* res) { return res ? res->verdict : -1; }
void exc_result_free(exc_result* res) { delete res; }

}  // extern "C"
