#include "crepant/report.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace crepant {

namespace {

json big_json(const BigInt& b) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (b >= lo && b <= hi) return json(b.convert_to<long long>());
  return json(b.str());
}

json vec2_json(const Vec2& v) { return json::array({v.x, v.y}); }

json scaled_json(const ScaledPoint& p) {
  json j;
  j["coords"] = p.coords;
  j["scale"] = p.scale;
  return j;
}

json chars_json(const CharNumbers& c) {
  json j;
  j["t1"] = c.t1;
  j["t2"] = c.t2;
  j["z1"] = c.z1;
  j["z2"] = c.z2;
  j["c1"] = c.c1;
  j["c2"] = c.c2;
  j["p_breve"] = c.p_breve;
  j["q"] = c.q;
  j["p"] = c.p;
  j["lambda"] = c.lambda;
  j["kappa"] = c.kappa;
  return j;
}

std::vector<Int> two_param_weights(const TwoParamType& t) {
  std::vector<Int> w(static_cast<size_t>(t.r - 2), 1);
  w.push_back(t.alpha);
  w.push_back(t.beta);
  return w;
}

}  // namespace

json cfrac_report(Int kappa, Int lambda, bool with_convergents) {
  RegularCF reg = regular_expand(kappa, lambda);
  NegRegCF neg = negreg_expand(kappa, lambda);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kappa"] = kappa;
  j["lambda"] = lambda;
  j["regular"] = reg.entries;
  j["negreg"] = neg.entries;
  if (with_convergents) {
    ConvergentTable ct = convergents(reg);
    NegConvergentTable nt = convergents(neg);
    j["convergents"] = {{"P", ct.P}, {"Q", ct.Q}, {"R", nt.R}, {"S", nt.S}};
  }
  return j;
}

json cone_report(const PqCone& c) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["p"] = c.p;
  j["q"] = c.q;
  j["generators"] = json::array({vec2_json(c.n1()), vec2_json(c.n2())});
  j["multiplicity"] = multiplicity(c);
  if (c.p >= 1)
    j["socius"] = socius(c.p, c.q);
  else
    j["socius"] = nullptr;
  PqCone d = dual_cone(c);
  j["dual"] = {{"p", d.p}, {"q", d.q}};
  if (c.q >= 2) {
    BoundaryPoints bp = boundary_points(c);
    HullVertices hv = hull_vertices(c);
    json pts = json::array(), flags = json::array();
    for (const Vec2& v : bp.points) pts.push_back(vec2_json(v));
    for (bool f : bp.vertex_flags) flags.push_back(f);
    j["boundary"] = pts;
    j["vertex_flags"] = flags;
    json prim = json::array(), du = json::array();
    for (const Vec2& v : hv.primal) prim.push_back(vec2_json(v));
    for (const Vec2& v : hv.dual) du.push_back(vec2_json(v));
    j["vertices"] = prim;
    j["dual_vertices"] = du;
    j["negreg"] = bp.negreg.entries;
    j["regular"] = hv.primal_cf.entries;
  } else {
    json pts = json::array();
    for (const Vec2& v : hilbert_basis_2d(c)) pts.push_back(vec2_json(v));
    j["boundary"] = pts;
    j["vertex_flags"] = json::array({true, true});
    j["vertices"] = pts;
    j["dual_vertices"] = pts;
    j["negreg"] = json::array();
    j["regular"] = json::array();
  }
  return j;
}

json hilbert_report(const QuotientType& t, const HilbertBasisReport& hb) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["l"] = t.l;
  j["weights"] = t.weights;
  json els = json::array();
  for (const ScaledPoint& p : hb.elements) els.push_back(scaled_json(p));
  j["elements"] = els;
  j["count"] = hb.elements.size();
  j["all_junior"] = hb.all_junior;
  return j;
}

json decision_report(const TwoParamType& t, const Decision& d) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "decision";
  j["input"] = {{"r", t.r},
                {"l", t.l},
                {"alpha", t.alpha},
                {"beta", t.beta},
                {"weights", two_param_weights(t)}};
  j["resolvable"] = d.resolvable;
  j["branch"] = branch_name(d.branch);
  j["mu"] = d.mu;
  if (d.chars)
    j["chars"] = chars_json(*d.chars);
  else
    j["chars"] = nullptr;
  json ws = json::array();
  for (const Witness& w : d.witnesses)
    ws.push_back({{"condition", w.condition}, {"holds", w.holds}});
  j["witnesses"] = ws;
  return j;
}

json one_param_report(Int r, Int l, const OneParamDecision& d) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "decision-one-param";
  std::vector<Int> w(static_cast<size_t>(r - 1), 1);
  w.push_back(l - (r - 1));
  j["input"] = {{"r", r}, {"l", l}, {"weights", w}};
  j["resolvable"] = d.resolvable;
  j["dims"] = d.dims;
  return j;
}

json brute_report(const QuotientType& t, const BruteDecision& d) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "decision-bruteforce";
  j["input"] = {{"r", t.r()}, {"l", t.l}, {"weights", t.weights}};
  const char* verdict = "not-resolvable";
  if (d.verdict == BruteVerdict::RESOLVABLE) verdict = "resolvable";
  if (d.verdict == BruteVerdict::NECESSARY_ONLY) verdict = "necessary-only/unknown";
  j["verdict"] = verdict;
  j["hilbert_all_junior"] = d.hilbert_all_junior;
  j["iff_applicable"] = d.iff_applicable;
  return j;
}

json fan_json(const JuniorFan& fan) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = {{"r", fan.type.r},
                {"l", fan.type.l},
                {"alpha", fan.type.alpha},
                {"beta", fan.type.beta}};
  json gens = json::array();
  for (const ScaledPoint& g : fan.generators) gens.push_back(scaled_json(g));
  j["generators"] = gens;
  j["maximal_cones"] = fan.maximal_cones;
  return j;
}

json fan_verify_json(const FanReport& rep) {
  json j;
  j["basic"] = rep.basic;
  j["crepant"] = rep.crepant;
  j["covering"] = rep.covering;
  j["compatible"] = rep.compatible;
  j["cone_count"] = rep.cone_count;
  j["failure"] = rep.failure;
  return j;
}

json cohomology_report(const TwoParamType& t, const Poly& ehr,
                       const std::vector<BigInt>& delta) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "cohomology";
  j["input"] = {{"r", t.r},
                {"l", t.l},
                {"alpha", t.alpha},
                {"beta", t.beta},
                {"weights", two_param_weights(t)}};
  json coeffs = json::array();
  for (const Rational& c : ehr) coeffs.push_back(rational_str(c));
  j["ehrhart"] = coeffs;
  json dv = json::array();
  for (const BigInt& d : delta) dv.push_back(big_json(d));
  j["delta"] = dv;
  return j;
}

json cohomology_one_param_report(Int r, Int l, const std::vector<BigInt>& dims) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "cohomology-one-param";
  std::vector<Int> w(static_cast<size_t>(r - 1), 1);
  w.push_back(l - (r - 1));
  j["input"] = {{"r", r}, {"l", l}, {"weights", w}};
  json dv = json::array();
  for (const BigInt& d : dims) dv.push_back(big_json(d));
  j["delta"] = dv;
  return j;
}

TwoParamType two_param_from_json(const json& j) {
  const json& in = j.at("input");
  return make_two_param(in.at("r").get<Int>(), in.at("l").get<Int>(),
                        in.at("alpha").get<Int>(), in.at("beta").get<Int>());
}

Decision decision_from_json(const json& j) {
  Decision d;
  d.resolvable = j.at("resolvable").get<bool>();
  d.mu = j.at("mu").get<Int>();
  std::string b = j.at("branch").get<std::string>();
  bool found = false;
  for (Branch br : {Branch::CON1, Branch::CON2, Branch::CON2_P0, Branch::FAIL_GCD,
                    Branch::FAIL_T, Branch::FAIL_CONGRUENCE}) {
    if (b == branch_name(br)) {
      d.branch = br;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown branch label: " + b);
  if (!j.at("chars").is_null()) {
    const json& c = j.at("chars");
    CharNumbers cn;
    cn.t1 = c.at("t1").get<Int>();
    cn.t2 = c.at("t2").get<Int>();
    cn.z1 = c.at("z1").get<Int>();
    cn.z2 = c.at("z2").get<Int>();
    cn.c1 = c.at("c1").get<Int>();
    cn.c2 = c.at("c2").get<Int>();
    cn.p_breve = c.at("p_breve").get<Int>();
    cn.q = c.at("q").get<Int>();
    cn.p = c.at("p").get<Int>();
    cn.lambda = c.at("lambda").get<std::vector<Int>>();
    cn.kappa = c.at("kappa").get<Int>();
    d.chars = cn;
  }
  for (const json& w : j.at("witnesses"))
    d.witnesses.push_back(
        {w.at("condition").get<std::string>(), w.at("holds").get<bool>()});
  return d;
}

json decision_report_from_parsed(const json& j) {
  return decision_report(two_param_from_json(j), decision_from_json(j));
}

std::vector<ScanRow> scan_rows(Int r, Int lmax, bool with_oracle, long long guard) {
  if (r < 4) throw std::invalid_argument("scan requires r >= 4");
  std::vector<ScanRow> rows;
  for (Int l = r; l <= lmax; ++l) {
    Int s = l - (r - 2);
    for (Int alpha = 1; 2 * alpha <= s; ++alpha) {
      TwoParamType t = make_two_param(r, l, alpha, s - alpha);
      Decision d = decide_two_param(t);
      ScanRow row;
      row.l = l;
      row.alpha = alpha;
      row.beta = s - alpha;
      row.resolvable = d.resolvable;
      row.branch = branch_name(d.branch);
      row.mu = d.mu;
      if (d.chars) {
        row.q = d.chars->q;
        row.p = d.chars->p;
        row.kappa = d.chars->kappa;
      }
      if (with_oracle) {
        BruteDecision bd = decide_bruteforce(to_quotient(t), guard);
        row.oracle_agrees =
            (bd.verdict == BruteVerdict::RESOLVABLE) == d.resolvable;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows, bool with_oracle) {
  std::ostringstream out;
  out << "l,alpha,beta,resolvable,branch,q,p,kappa,mu";
  if (with_oracle) out << ",agree";
  out << "\n";
  auto opt = [](const std::optional<Int>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  for (const ScanRow& r : rows) {
    out << r.l << "," << r.alpha << "," << r.beta << "," << (r.resolvable ? 1 : 0)
        << "," << r.branch << "," << opt(r.q) << "," << opt(r.p) << ","
        << opt(r.kappa) << "," << r.mu;
    if (with_oracle) out << "," << (r.oracle_agrees.value_or(false) ? 1 : 0);
    out << "\n";
  }
  return out.str();
}

json scan_json(const std::vector<ScanRow>& rows, Int r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["r"] = r;
  json arr = json::array();
  for (const ScanRow& row : rows) {
    json one;
    one["l"] = row.l;
    one["alpha"] = row.alpha;
    one["beta"] = row.beta;
    one["resolvable"] = row.resolvable;
    one["branch"] = row.branch;
    one["mu"] = row.mu;
    if (row.q) one["q"] = *row.q;
    if (row.p) one["p"] = *row.p;
    if (row.kappa) one["kappa"] = *row.kappa;
    if (row.oracle_agrees) one["agree"] = *row.oracle_agrees;
    arr.push_back(one);
  }
  j["rows"] = arr;
  return j;
}

}  // namespace crepant
