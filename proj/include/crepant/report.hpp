#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crepant/cfrac.hpp"
#include "crepant/cone2d.hpp"
#include "crepant/criterion.hpp"
#include "crepant/ehrhart.hpp"
#include "crepant/fan.hpp"
#include "crepant/quotient.hpp"

namespace crepant {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json cfrac_report(Int kappa, Int lambda, bool with_convergents = false);
json cone_report(const PqCone& c);
json hilbert_report(const QuotientType& t, const HilbertBasisReport& hb);

// Decision report for the two-parameter path.
json decision_report(const TwoParamType& t, const Decision& d);
json one_param_report(Int r, Int l, const OneParamDecision& d);
json brute_report(const QuotientType& t, const BruteDecision& d);

json fan_json(const JuniorFan& fan);
json fan_verify_json(const FanReport& rep);

json cohomology_report(const TwoParamType& t, const Poly& ehr,
                       const std::vector<BigInt>& delta);
json cohomology_one_param_report(Int r, Int l, const std::vector<BigInt>& dims);

// Parsers for round-trip checks; throw on malformed input.
TwoParamType two_param_from_json(const json& j);
Decision decision_from_json(const json& j);
json decision_report_from_parsed(const json& j);

struct ScanRow {
  Int l = 0;
  Int alpha = 0;
  Int beta = 0;
  bool resolvable = false;
  std::string branch;
  std::optional<Int> q, p, kappa;
  Int mu = 1;
  std::optional<bool> oracle_agrees;
};

std::vector<ScanRow> scan_rows(Int r, Int lmax, bool with_oracle,
                               long long guard);
std::string scan_csv(const std::vector<ScanRow>& rows, bool with_oracle);
json scan_json(const std::vector<ScanRow>& rows, Int r);

}  // namespace crepant
