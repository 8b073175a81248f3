#pragma once

#include <json.hpp>

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "prstar/commprob.hpp"
#include "prstar/config.hpp"
#include "prstar/structure.hpp"

namespace prstar {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { pass, fail, skipped, report_only };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::report_only: return "report-only";
  }
  return "?";
}

inline CheckStatus status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skipped") return CheckStatus::skipped;
  if (s == "report-only") return CheckStatus::report_only;
  throw IoFailure("unknown check status '" + s + "'");
}

/// Outcome of one machine check.  A fail carries concrete counterexample
/// data in details.  elapsed_ms is console diagnostics only: it is never
/// serialized, so reports with equal seed and config are byte-identical.
struct CheckResult {
  std::string check_id;
  std::string group_label;
  CheckStatus status = CheckStatus::pass;
  std::string reason;           // skip reason, or failure headline
  nlohmann::json details = nlohmann::json::object();
  double elapsed_ms = 0.0;
};

struct DashboardWitness {
  BigInt order;
  int cls = 0;
  std::uint64_t exp_quotient = 1;
  BigInt order_gamma_k1;
};

/// Hypothesis/conclusion numbers for one theorem on one group.  Asymptotic
/// conclusions are reported, never judged.
struct Dashboard {
  std::string group_label;
  std::string theorem_id;
  Ratio hypothesis_eps;
  bool eps_lower_bound_only = false;
  bool eps_skipped = false;
  std::string eps_skip_reason;
  BigInt index_f2;
  std::uint64_t exp_g_mod_f = 1;
  BigInt index_f;
  int s = 0;  // |pi(F(G))|
  std::optional<DashboardWitness> witness_r;
  nlohmann::json extra = nlohmann::json::object();
};

struct ReportDocument {
  std::string tool_version = kToolVersion;
  nlohmann::json config_snapshot = nlohmann::json::object();
  std::vector<nlohmann::json> group_descriptors;
  std::vector<CheckResult> checks;
  std::vector<Dashboard> dashboards;
  std::vector<nlohmann::json> prstar_payloads;
};

// ---------------------------------------------------------------------------
// JSON encoding.  Rationals are {num, den} decimal strings, never floats;
// subgroups are {order, index, generators}; nlohmann::json orders keys, so
// dumps are byte-stable.
// ---------------------------------------------------------------------------

inline nlohmann::json ratio_json(const Ratio& r) {
  return {{"num", r.num().str()}, {"den", r.den().str()}};
}

inline Ratio ratio_from_json(const nlohmann::json& j) {
  return Ratio(BigInt(j.at("num").get<std::string>()),
               BigInt(j.at("den").get<std::string>()));
}

inline nlohmann::json subgroup_json(const SubgroupRef& s) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Permutation& g : s.generators()) gens.push_back(format_cycles(g));
  nlohmann::json out{{"order", s.order().str()}, {"generators", gens}};
  if (s.parent()) out["index"] = BigInt(s.parent()->order() / s.order()).str();
  return out;
}

inline nlohmann::json group_descriptor(const GroupHandle& g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Permutation& p : g->generators()) gens.push_back(format_cycles(p));
  return {{"label", g->label()},
          {"degree", g->degree()},
          {"order", g->order().str()},
          {"generators", gens}};
}

inline nlohmann::json config_json(const Config& cfg) {
  return {{"enumerationCap", cfg.caps.enumeration_cap},
          {"cosetDegreeCap", cfg.caps.coset_degree_cap},
          {"sylowEnumCap", cfg.caps.sylow_enum_cap},
          {"searchBudget", cfg.caps.search_budget},
          {"seed", cfg.seed},
          {"outputFormat", cfg.output_format}};
}

inline nlohmann::json structure_report_json(const StructureReport& r) {
  nlohmann::json primes = nlohmann::json::array();
  for (std::uint64_t p : r.primes.primes) primes.push_back(p);
  return {{"label", r.label},
          {"order", r.order.str()},
          {"pi", primes},
          {"gammaInf", subgroup_json(r.gamma_inf)},
          {"fitting", subgroup_json(r.fitting1)},
          {"fitting2", subgroup_json(r.fitting2)},
          {"fstar", subgroup_json(r.fstar)},
          {"fstar2", subgroup_json(r.fstar2)},
          {"radical", subgroup_json(r.radical)},
          {"nilpotent", r.nilpotent},
          {"soluble", r.soluble},
          {"expModFitting", r.exp_mod_fitting}};
}

inline nlohmann::json prstar_json(const PrStarReport& rep) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const PrStarPair& p : rep.pairs) {
    pairs.push_back({{"p", p.p},
                     {"q", p.q},
                     {"best", ratio_json(p.best)},
                     {"witnessP", subgroup_json(p.witness_p)},
                     {"witnessQ", subgroup_json(p.witness_q)},
                     {"exhaustive", p.exhaustive}});
  }
  return {{"value", ratio_json(rep.value)},
          {"lowerBoundOnly", rep.lower_bound_only},
          {"pairs", pairs}};
}

inline nlohmann::json check_json(const CheckResult& c) {
  return {{"check", c.check_id},
          {"group", c.group_label},
          {"status", to_string(c.status)},
          {"reason", c.reason},
          {"details", c.details}};
}

inline CheckResult check_from_json(const nlohmann::json& j) {
  CheckResult c;
  c.check_id = j.at("check").get<std::string>();
  c.group_label = j.at("group").get<std::string>();
  c.status = status_from_string(j.at("status").get<std::string>());
  c.reason = j.at("reason").get<std::string>();
  c.details = j.at("details");
  return c;
}

inline nlohmann::json dashboard_json(const Dashboard& d) {
  nlohmann::json conclusions{{"indexF2", d.index_f2.str()},
                             {"expGmodF", d.exp_g_mod_f},
                             {"indexF", d.index_f.str()},
                             {"s", d.s}};
  if (d.witness_r) {
    conclusions["witnessR"] = {{"order", d.witness_r->order.str()},
                               {"class", d.witness_r->cls},
                               {"expQuotient", d.witness_r->exp_quotient},
                               {"orderGammaK1R", d.witness_r->order_gamma_k1.str()}};
  }
  nlohmann::json out{{"group", d.group_label},
                     {"theorem", d.theorem_id},
                     {"conclusions", conclusions},
                     {"extra", d.extra}};
  if (d.eps_skipped) {
    out["hypothesisEpsilon"] = nullptr;
    out["epsilonSkipReason"] = d.eps_skip_reason;
  } else {
    out["hypothesisEpsilon"] = ratio_json(d.hypothesis_eps);
    out["epsilonLowerBoundOnly"] = d.eps_lower_bound_only;
  }
  return out;
}

inline Dashboard dashboard_from_json(const nlohmann::json& j) {
  Dashboard d;
  d.group_label = j.at("group").get<std::string>();
  d.theorem_id = j.at("theorem").get<std::string>();
  if (j.at("hypothesisEpsilon").is_null()) {
    d.eps_skipped = true;
    d.eps_skip_reason = j.value("epsilonSkipReason", "");
  } else {
    d.hypothesis_eps = ratio_from_json(j.at("hypothesisEpsilon"));
    d.eps_lower_bound_only = j.value("epsilonLowerBoundOnly", false);
  }
  const nlohmann::json& c = j.at("conclusions");
  d.index_f2 = BigInt(c.at("indexF2").get<std::string>());
  d.exp_g_mod_f = c.at("expGmodF").get<std::uint64_t>();
  d.index_f = BigInt(c.at("indexF").get<std::string>());
  d.s = c.at("s").get<int>();
  if (c.contains("witnessR")) {
    DashboardWitness w;
    w.order = BigInt(c.at("witnessR").at("order").get<std::string>());
    w.cls = c.at("witnessR").at("class").get<int>();
    w.exp_quotient = c.at("witnessR").at("expQuotient").get<std::uint64_t>();
    w.order_gamma_k1 = BigInt(c.at("witnessR").at("orderGammaK1R").get<std::string>());
    d.witness_r = w;
  }
  d.extra = j.at("extra");
  return d;
}

inline nlohmann::json document_json(const ReportDocument& doc) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : doc.checks) checks.push_back(check_json(c));
  nlohmann::json dashboards = nlohmann::json::array();
  for (const Dashboard& d : doc.dashboards) dashboards.push_back(dashboard_json(d));
  return {{"toolVersion", doc.tool_version},
          {"config", doc.config_snapshot},
          {"groups", doc.group_descriptors},
          {"checks", checks},
          {"dashboards", dashboards},
          {"prstar", doc.prstar_payloads}};
}

inline ReportDocument document_from_json(const nlohmann::json& j) {
  ReportDocument doc;
  doc.tool_version = j.at("toolVersion").get<std::string>();
  doc.config_snapshot = j.at("config");
  for (const nlohmann::json& g : j.at("groups")) doc.group_descriptors.push_back(g);
  for (const nlohmann::json& c : j.at("checks")) doc.checks.push_back(check_from_json(c));
  for (const nlohmann::json& d : j.at("dashboards"))
    doc.dashboards.push_back(dashboard_from_json(d));
  for (const nlohmann::json& p : j.at("prstar")) doc.prstar_payloads.push_back(p);
  return doc;
}

inline std::string serialize_report(const ReportDocument& doc) {
  return document_json(doc).dump(2) + "\n";
}

inline ReportDocument parse_report(const std::string& text) {
  return document_from_json(nlohmann::json::parse(text));
}

// CSV flattening: one row per (group, metric); dashboards contribute one row
// per conclusion field.
inline std::string report_csv(const ReportDocument& doc) {
  std::string out = "kind,group,id,metric,value\n";
  auto esc = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  for (const CheckResult& c : doc.checks) {
    out += "check," + esc(c.group_label) + "," + esc(c.check_id) + ",status," +
           to_string(c.status) + "\n";
  }
  for (const Dashboard& d : doc.dashboards) {
    std::string prefix = "dashboard," + esc(d.group_label) + "," + esc(d.theorem_id) + ",";
    out += prefix + "epsilon," +
           (d.eps_skipped ? std::string("skipped") : d.hypothesis_eps.str()) + "\n";
    out += prefix + "indexF2," + d.index_f2.str() + "\n";
    out += prefix + "expGmodF," + std::to_string(d.exp_g_mod_f) + "\n";
    out += prefix + "indexF," + d.index_f.str() + "\n";
    out += prefix + "s," + std::to_string(d.s) + "\n";
  }
  return out;
}

inline std::string report_text(const ReportDocument& doc) {
  std::string out;
  int pass = 0, fail = 0, skip = 0, info = 0;
  for (const CheckResult& c : doc.checks) {
    switch (c.status) {
      case CheckStatus::pass: ++pass; break;
      case CheckStatus::fail: ++fail; break;
      case CheckStatus::skipped: ++skip; break;
      case CheckStatus::report_only: ++info; break;
    }
    out += "[" + to_string(c.status) + "] " + c.group_label + " :: " + c.check_id;
    if (!c.reason.empty()) out += " (" + c.reason + ")";
    out += "\n";
  }
  for (const Dashboard& d : doc.dashboards) {
    out += "[dashboard] " + d.group_label + " :: " + d.theorem_id + " eps=";
    out += d.eps_skipped ? ("skipped(" + d.eps_skip_reason + ")") : d.hypothesis_eps.str();
    out += " |G:F2|=" + d.index_f2.str() + " exp(G/F)=" + std::to_string(d.exp_g_mod_f);
    out += " |G:F|=" + d.index_f.str() + " s=" + std::to_string(d.s) + "\n";
  }
  out += "summary: " + std::to_string(pass) + " pass, " + std::to_string(fail) +
         " fail, " + std::to_string(skip) + " skipped, " + std::to_string(info) +
         " report-only\n";
  return out;
}

inline void emit_report(const ReportDocument& doc, const std::string& path,
                        const std::string& format) {
  std::string payload;
  if (format == "json")
    payload = serialize_report(doc);
  else if (format == "csv")
    payload = report_csv(doc);
  else if (format == "text")
    payload = report_text(doc);
  else
    throw IoFailure("unknown report format '" + format + "'");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  out << payload;
  if (!out) throw IoFailure("write failed for " + path);
}

inline bool any_check_failed(const ReportDocument& doc) {
  for (const CheckResult& c : doc.checks)
    if (c.status == CheckStatus::fail) return true;
  return false;
}

}  // namespace prstar
