#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crepant/report.hpp"

namespace {

using namespace crepant;

long long guard_value(long long fallback) {
  const char* env = std::getenv("CREPANT_GUARD");
  if (env == nullptr || *env == '\0') return fallback;
  return std::stoll(env);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct DecideArgs {
  Int r = 0, l = 0, alpha = 0, beta = 0;
  bool one_param = false;
  std::vector<Int> weights;
};

int run_decide(const DecideArgs& a) {
  if (a.one_param) {
    if (a.r == 0 || a.l == 0)
      throw std::invalid_argument("--one-param needs --r and --l");
    OneParamDecision d = decide_one_param(a.r, a.l);
    emit(one_param_report(a.r, a.l, d));
    return d.resolvable ? 0 : 1;
  }
  if (!a.weights.empty()) {
    if (a.l == 0) throw std::invalid_argument("--weights needs --l");
    QuotientType t = make_quotient(a.l, a.weights);
    BruteDecision d = decide_bruteforce(t, guard_value(100000000LL));
    emit(brute_report(t, d));
    if (d.verdict == BruteVerdict::RESOLVABLE) return 0;
    if (d.verdict == BruteVerdict::NOT_RESOLVABLE) return 1;
    return 2;
  }
  if (a.r == 0 || a.l == 0 || a.alpha == 0 || a.beta == 0)
    throw std::invalid_argument("decide needs --r, --l, --alpha, --beta");
  TwoParamType t = make_two_param(a.r, a.l, a.alpha, a.beta);
  Decision d = decide_two_param(t);
  emit(decision_report(t, d));
  return d.resolvable ? 0 : 1;
}

struct ScanArgs {
  Int r = 4, lmax = 20;
  bool oracle = false;
  bool as_json = false;
  bool as_csv = false;
};

int run_scan(const ScanArgs& a) {
  std::vector<ScanRow> rows = scan_rows(a.r, a.lmax, a.oracle, guard_value(100000000LL));
  if (a.as_json)
    emit(scan_json(rows, a.r));
  else
    std::cout << scan_csv(rows, a.oracle);
  if (a.oracle)
    for (const ScanRow& row : rows)
      if (!row.oracle_agrees.value_or(false)) {
        std::cerr << "disagreement at l=" << row.l << " alpha=" << row.alpha
                  << " beta=" << row.beta << "\n";
        return 4;
      }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crepant resolution tester for Gorenstein cyclic quotient singularities"};
  app.require_subcommand(1);

  DecideArgs da;
  CLI::App* decide = app.add_subcommand("decide", "Decide existence of a crepant full resolution");
  decide->add_option("--r", da.r, "Dimension");
  decide->add_option("--l", da.l, "Group order");
  decide->add_option("--alpha", da.alpha, "First distinguished weight");
  decide->add_option("--beta", da.beta, "Second distinguished weight");
  decide->add_flag("--one-param", da.one_param, "One-parameter type 1/l(1,...,1,l-(r-1))");
  decide->add_option("--weights", da.weights, "Explicit weights for brute-force mode")
      ->delimiter(',');

  ScanArgs sa;
  CLI::App* scan = app.add_subcommand("scan", "Tabulate verdicts for all two-parameter types");
  scan->add_option("--r", sa.r, "Dimension")->required();
  scan->add_option("--lmax", sa.lmax, "Largest group order")->required();
  scan->add_flag("--oracle", sa.oracle, "Cross-check each row against brute force");
  scan->add_flag("--json", sa.as_json, "Emit JSON instead of CSV");
  scan->add_flag("--csv", sa.as_csv, "Emit CSV (default)");

  Int cf_kappa = 0, cf_lambda = 0;
  bool cf_conv = false;
  CLI::App* cfrac = app.add_subcommand("cfrac", "Regular and negative-regular expansions");
  cfrac->add_option("kappa", cf_kappa, "Numerator")->required();
  cfrac->add_option("lambda", cf_lambda, "Denominator")->required();
  cfrac->add_flag("--convergents", cf_conv, "Include convergent tables");

  Int cone_p = 0, cone_q = 1;
  CLI::App* cone = app.add_subcommand("cone", "Invariants of a (p,q)-cone");
  cone->add_option("--p", cone_p, "Normal-form parameter p")->required();
  cone->add_option("--q", cone_q, "Multiplicity q")->required();

  Int hb_l = 0;
  std::vector<Int> hb_weights;
  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert basis of the quotient orthant");
  hilbert->add_option("--l", hb_l, "Group order")->required();
  hilbert->add_option("--weights", hb_weights, "Weights")->required()->delimiter(',');

  Int fan_r = 0, fan_l = 0, fan_alpha = 0, fan_beta = 0;
  bool fan_verify = false;
  CLI::App* fan = app.add_subcommand("fan", "Resolution fan of a resolvable two-parameter type");
  fan->add_option("--r", fan_r, "Dimension")->required();
  fan->add_option("--l", fan_l, "Group order")->required();
  fan->add_option("--alpha", fan_alpha, "First distinguished weight")->required();
  fan->add_option("--beta", fan_beta, "Second distinguished weight")->required();
  fan->add_flag("--verify", fan_verify, "Append the verification report");

  DecideArgs ca;
  CLI::App* cohom = app.add_subcommand("cohomology", "Ehrhart coefficients and delta vector");
  cohom->add_option("--r", ca.r, "Dimension");
  cohom->add_option("--l", ca.l, "Group order");
  cohom->add_option("--alpha", ca.alpha, "First distinguished weight");
  cohom->add_option("--beta", ca.beta, "Second distinguished weight");
  cohom->add_flag("--one-param", ca.one_param, "One-parameter type");

  CLI11_PARSE(app, argc, argv);

  try {
    if (decide->parsed()) return run_decide(da);
    if (scan->parsed()) return run_scan(sa);
    if (cfrac->parsed()) {
      emit(cfrac_report(cf_kappa, cf_lambda, cf_conv));
      return 0;
    }
    if (cone->parsed()) {
      emit(cone_report(make_pq_cone(cone_p, cone_q)));
      return 0;
    }
    if (hilbert->parsed()) {
      QuotientType t = make_quotient(hb_l, hb_weights);
      HilbertBasisReport hb = hilbert_basis_bruteforce(t, guard_value(100000000LL));
      emit(hilbert_report(t, hb));
      return 0;
    }
    if (fan->parsed()) {
      TwoParamType t = make_two_param(fan_r, fan_l, fan_alpha, fan_beta);
      JuniorFan jf = build_join_fan(t);
      json out = fan_json(jf);
      if (fan_verify) out["verification"] = fan_verify_json(verify_fan(jf));
      emit(out);
      return 0;
    }
    if (cohom->parsed()) {
      if (ca.one_param) {
        if (ca.r == 0 || ca.l == 0)
          throw std::invalid_argument("--one-param needs --r and --l");
        emit(cohomology_one_param_report(ca.r, ca.l,
                                         cohomology_dims_one_param(ca.r, ca.l)));
        return 0;
      }
      if (ca.r == 0 || ca.l == 0 || ca.alpha == 0 || ca.beta == 0)
        throw std::invalid_argument("cohomology needs --r, --l, --alpha, --beta");
      TwoParamType t = make_two_param(ca.r, ca.l, ca.alpha, ca.beta);
      Poly ehr = ehrhart_junior(t);
      emit(cohomology_report(t, ehr, delta_from_ehrhart(ehr)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
