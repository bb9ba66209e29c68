#include "exc/exc.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

// exit codes: 0 definitive, 1 negative, 2 partial or undecided, 3 bad input
int exit_for(exc_status s) {
  switch (s) {
    case EXC_OK: return 0;
    case EXC_E_EXTERNAL_REFERENCE:
    case EXC_E_AMBIGUOUS:
    case EXC_E_PRECISION:
    case EXC_E_INCONSISTENCY:
    case EXC_E_UNCLASSIFIED: return 2;
    default: return 3;
  }
}

void print_error(const std::string& kind, const std::string& message) {
  nlohmann::json j = {{"schema_version", 1}, {"error", {{"kind", kind}, {"message", message}}}, {"verdict", "error"}};
  std::cout << j.dump(2) << "\n";
}

int finish(exc_context* ctx, exc_status s, exc_result* res) {
  if (s != EXC_OK) {
    std::cerr << "exctool: " << exc_status_name(s) << ": " << exc_last_error(ctx) << "\n";
    print_error(exc_status_name(s), exc_last_error(ctx));
    return exit_for(s);
  }
  std::cout << exc_result_json(res) << "\n";
  const int v = exc_result_verdict(res);
  exc_result_free(res);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serre invariants of mod-ell representations with exceptional projective image"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", exc_version());

  std::string poly;
  std::uint64_t ell = 0, p = 0;
  int twist_bound = 0;
  std::string level, nu = "trivial", catalog, variant;
  int k = 0, c = -1, m = 0;

  auto* analyze = app.add_subcommand("analyze", "Galois group, ramification and local types");
  analyze->add_option("--poly", poly, "coefficients as a JSON array, constant term first")->required();
  analyze->add_option("--ell", ell, "odd prime")->required();

  auto* serre = app.add_subcommand("serre-types", "enumerate (N, weights, nu) families");
  serre->add_option("--poly", poly, "coefficients as a JSON array, constant term first")->required();
  serre->add_option("--ell", ell, "odd prime")->required();
  serre->add_option("--twist-bound", twist_bound, "largest conductor exponent per prime")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* det = app.add_subcommand("detect", "search a field catalog for a given (N, k, nu)");
  det->add_option("--N", level, "level")->required();
  det->add_option("--k", k, "weight")->required();
  det->add_option("--nu", nu, "\"trivial\" or {modulus, order, exponents} JSON")->capture_default_str();
  det->add_option("--ell", ell, "odd prime")->required();
  det->add_option("--catalog", catalog, "csv or json-lines catalog (default: $EXC_CATALOG, else built in)");

  auto* local = app.add_subcommand("local", "local analysis at one prime");
  local->add_option("--poly", poly, "coefficients as a JSON array, constant term first")->required();
  local->add_option("--p", p, "prime")->required();

  auto* cor = app.add_subcommand("corollary1", "level exponent and epsilon at 2 for the dihedral-8 S4 case");
  cor->add_option("--variant", variant, "unramified, M2, M3 or M4 (default: all)");
  cor->add_option("--c", c, "conductor exponent of phi (default: list the regimes)")->check(CLI::NonNegativeNumber);

  auto* emb = app.add_subcommand("embed-check", "verify the A5 embedding into PGL2(F_q)");
  emb->add_option("--ell", ell, "prime")->required();
  emb->add_option("--m", m, "degree of F_q over F_ell (0: smallest with 5 | q - 1)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "exctool: " << e.what() << "\n";
    print_error("usage", e.what());
    return 3;
  }

  exc_context* ctx = exc_context_new();
  exc_result* res = nullptr;
  exc_status s = EXC_E_INTERNAL;
  if (analyze->parsed()) {
    s = exc_analyze(ctx, poly.c_str(), ell, &res);
  } else if (serre->parsed()) {
    s = exc_serre_types(ctx, poly.c_str(), ell, twist_bound, &res);
  } else if (det->parsed()) {
    if (catalog.empty()) {
      if (const char* env = std::getenv("EXC_CATALOG"); env && *env) catalog = env;
    }
    s = exc_detect(ctx, level.c_str(), k, nu.c_str(), ell, catalog.empty() ? nullptr : catalog.c_str(), &res);
  } else if (local->parsed()) {
    s = exc_local(ctx, poly.c_str(), p, &res);
  } else if (cor->parsed()) {
    s = exc_corollary1(ctx, variant.empty() ? nullptr : variant.c_str(), c, &res);
  } else if (emb->parsed()) {
    s = exc_embed_check(ctx, ell, m, &res);
  }
  const int rc = finish(ctx, s, res);
  exc_context_free(ctx);
  return rc;
}
