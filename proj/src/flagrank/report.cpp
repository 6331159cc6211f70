#include "flagrank/report.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "flagrank/classical.hpp"
#include "flagrank/levidecomp.hpp"
#include "flagrank/orbitrank.hpp"
#include "flagrank/tables.hpp"

namespace flagrank {

namespace {

using nlohmann::json;

RunConfig run_config(const ReportConfig& cfg) {
  RunConfig rc;
  rc.seed = cfg.seed;
  rc.retries = cfg.retries;
  rc.coeff_height = cfg.height;
  return rc;
}

void check_type(char family, int rank, int max_rank) {
  std::string why;
  if (!valid_simple_type({family, rank}, &why))
    throw std::invalid_argument(why.empty() ? "invalid simple type" : why);
  if (family == 'D' && rank < 4)
    throw std::invalid_argument("type D requires rank >= 4");
  if (rank > max_rank)
    throw std::invalid_argument("rank exceeds --max-rank (" +
                                std::to_string(max_rank) + ")");
}

json certificate_json(const RankCertificate& c) {
  json j;
  j["required_rank"] = c.required_rank;
  j["achieved_rank"] = c.achieved_rank;
  j["full"] = c.full;
  j["dimension_bound"] = c.dimension_bound;
  j["attempts"] = c.attempts;
  json pts = json::array();
  for (const auto& p : c.points) pts.push_back(p.coeffs);
  j["points"] = pts;
  return j;
}

json matrix_json(const RatMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string type_str(char family, int rank) {
  return std::string(1, family) + "_" + std::to_string(rank);
}

ReportResult finish(const json& j, const std::string& markdown,
                    const ReportConfig& cfg, bool mismatch) {
  ReportResult r;
  r.mismatch = mismatch;
  r.text = cfg.format == "markdown" ? markdown : j.dump(2) + "\n";
  return r;
}

LeviCase parse_case(const std::string& name) {
  if (name == "B" || name == "B1l") return LeviCase::B1l;
  if (name == "C" || name == "C1l") return LeviCase::C1l;
  if (name == "D" || name == "Dll") return LeviCase::Dll;
  if (name == "D1ll") return LeviCase::D1ll;
  throw std::invalid_argument("unknown case: " + name +
                              " (expected B, C, D, or D1ll)");
}

CrossRatioKind parse_kind(const std::string& kind) {
  if (kind == "quadruple") return CrossRatioKind::Quadruple;
  if (kind == "so6-cross-ratio") return CrossRatioKind::SO6;
  if (kind == "so2l-p1l") return CrossRatioKind::SO2l_P1l;
  if (kind == "so2l-pll") return CrossRatioKind::SO2l_Pll;
  throw std::invalid_argument(
      "unknown kind: " + kind +
      " (expected quadruple, so6-cross-ratio, so2l-p1l, so2l-pll)");
}

}  // namespace

ReportResult classify_report(char family, int rank,
                             const std::vector<int>& marked, int n,
                             const ReportConfig& cfg) {
  check_type(family, rank, cfg.max_rank);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  ChevalleyAlgebra alg(build_root_system({family, rank}));
  ParabolicData p = make_parabolic(alg, marked);
  RunConfig rc = run_config(cfg);
  TransitivityVerdict v = diagonal_open_orbit(alg, p, n, rc);

  json j;
  j["command"] = "classify";
  j["type"] = type_str(family, rank);
  j["marked"] = marked;
  j["n"] = n;
  j["seed"] = cfg.seed;
  j["group_dim"] = alg.dim();
  j["flag_dim"] = p.flag_dim;
  j["self_opposite"] = p.self_opposite;
  j["transitive"] = v.generically_transitive;
  j["method"] =
      v.certificate.dimension_bound ? "dimension-bound" : "tangent-rank";
  j["certificate"] = certificate_json(v.certificate);

  bool mismatch = false;
  json cc;
  cc["performed"] = false;
  if (p.self_opposite && n >= 3) {
    TransitivityVerdict lv = levi_open_orbit(alg, p, n - 2, rc);
    cc["performed"] = true;
    cc["levi_copies"] = n - 2;
    cc["levi_transitive"] = lv.generically_transitive;
    cc["agrees"] = lv.generically_transitive == v.generically_transitive;
    if (!cc["agrees"].get<bool>()) mismatch = true;
  }
  j["levi_cross_check"] = cc;

  std::ostringstream md;
  md << "## classify " << type_str(family, rank) << " P_" << json(marked).dump()
     << " n=" << n << "\n\n"
     << "- open diagonal orbit: " << (v.generically_transitive ? "yes" : "no")
     << "\n- method: " << j["method"].get<std::string>() << "\n- rank: "
     << v.certificate.achieved_rank << "/" << v.certificate.required_rank
     << "\n";
  if (cc["performed"].get<bool>())
    md << "- Levi cross-check (" << (n - 2)
       << " copies of u^-): " << (mismatch ? "DISAGREES" : "agrees") << "\n";
  return finish(j, md.str(), cfg, mismatch);
}

ReportResult table_report(const std::string& name, const ReportConfig& cfg) {
  TableRun run = run_table(name, run_config(cfg), cfg.max_rank, cfg.threads);
  json j;
  j["command"] = "table";
  j["table"] = run.name;
  j["seed"] = cfg.seed;
  j["all_match"] = run.all_match;
  json cells = json::array();
  for (const auto& c : run.cells) {
    json cj;
    cj["type"] = type_str(c.family, c.rank);
    cj["marked"] = c.marked;
    if (run.name != "corollary") cj["n"] = c.n;
    cj["computed"] = c.computed;
    cj["expected"] = c.expected;
    cj["match"] = c.match;
    cells.push_back(cj);
  }
  j["cells"] = cells;
  return finish(j, table_markdown(run), cfg, !run.all_match);
}

ReportResult decompose_report(char family, int rank,
                              const std::vector<int>& marked,
                              const ReportConfig& cfg) {
  check_type(family, rank, cfg.max_rank);
  ChevalleyAlgebra alg(build_root_system({family, rank}));
  ParabolicData p = make_parabolic(alg, marked);
  LeviDecomposition d = decompose_u_minus(alg, p);

  json j;
  j["command"] = "decompose";
  j["type"] = type_str(family, rank);
  j["marked"] = marked;
  j["flag_dim"] = p.flag_dim;
  json summands = json::array();
  std::ostringstream md;
  md << "## decompose " << type_str(family, rank) << " P_"
     << json(marked).dump() << "\n\n"
     << "| degree | dim | irreducible | invariant quadratics |\n|---|---|---|---|\n";
  for (const auto& s : d.summands) {
    json sj;
    sj["degree"] = s.degree;
    sj["dim"] = static_cast<int>(s.roots.size());
    sj["irreducible"] = s.irreducible;
    json roots = json::array();
    for (int r : s.roots) roots.push_back(alg.root_system().positive_roots[r]);
    sj["roots"] = roots;
    auto quads = invariant_quadratics(alg, p, s);
    json qj = json::array();
    for (const auto& q : quads) qj.push_back(matrix_json(q));
    sj["invariant_quadratics"] = qj;
    summands.push_back(sj);
    md << "| " << json(s.degree).dump() << " | " << s.roots.size() << " | "
       << (s.irreducible ? "yes" : "no") << " | " << quads.size() << " |\n";
  }
  j["summands"] = summands;
  j["central_weight_relations"] = central_weight_relations(d);
  md << "\ncentral weight relations: "
     << j["central_weight_relations"].dump() << "\n";
  return finish(j, md.str(), cfg, false);
}

ReportResult invariants_report(const std::string& case_name, int l, int trials,
                               const ReportConfig& cfg) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  LeviCase tag = parse_case(case_name);
  InvariantReport rep = verify_rational_invariant(tag, l, cfg.seed, trials);
  bool mismatch = !(rep.all_equal && rep.nonconstant);
  json j;
  j["command"] = "verify-invariants";
  j["case"] = case_name;
  j["l"] = l;
  j["seed"] = cfg.seed;
  j["trials"] = rep.trials;
  j["all_equal"] = rep.all_equal;
  j["nonconstant"] = rep.nonconstant;
  j["value"] = rat_to_string(rep.value);
  j["other_value"] = rat_to_string(rep.other_value);
  std::ostringstream md;
  md << "## verify-invariants " << case_name << " l=" << l << "\n\n"
     << "- invariant under " << rep.trials
     << " random Levi elements: " << (rep.all_equal ? "yes" : "NO") << "\n"
     << "- non-constant on u^-: " << (rep.nonconstant ? "yes" : "NO") << "\n"
     << "- values: " << rat_to_string(rep.value) << ", "
     << rat_to_string(rep.other_value) << "\n";
  return finish(j, md.str(), cfg, mismatch);
}

ReportResult certify_report(const std::string& kind, int l,
                            const std::vector<std::string>& params1,
                            const std::vector<std::string>& params2,
                            int trials, const ReportConfig& cfg) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  CrossRatioKind k = parse_kind(kind);
  auto parse = [](const std::vector<std::string>& ps) {
    std::vector<Rat> out;
    for (const auto& s : ps) out.push_back(rat_from_string(s));
    return out;
  };
  CrossRatioReport rep =
      cross_ratio_certificate(k, l, parse(params1), parse(params2), trials,
                              cfg.seed);
  bool mismatch = !(rep.invariant && rep.distinct);
  json j;
  j["command"] = "certify";
  j["kind"] = kind;
  j["l"] = l;
  j["seed"] = cfg.seed;
  j["trials"] = rep.trials;
  j["params1"] = params1;
  j["params2"] = params2;
  j["value1"] = rat_to_string(rep.value1);
  j["value2"] = rat_to_string(rep.value2);
  j["invariant"] = rep.invariant;
  j["distinct"] = rep.distinct;
  std::ostringstream md;
  md << "## certify " << kind << " l=" << l << "\n\n"
     << "- cross ratios: " << rat_to_string(rep.value1) << ", "
     << rat_to_string(rep.value2) << "\n"
     << "- invariant under " << rep.trials
     << " group elements: " << (rep.invariant ? "yes" : "NO") << "\n"
     << "- values distinct (infinitely many orbits): "
     << (rep.distinct ? "yes" : "NO") << "\n";
  return finish(j, md.str(), cfg, mismatch);
}

}  // namespace flagrank
