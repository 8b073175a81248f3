// prstar: exact commuting-probability toolkit for finite permutation groups.
//
// Subcommands: group info, prob pr, prob prstar, verify lemmas,
// verify example31, verify example52, report dashboard.
// Exit codes: 0 all pass, 1 a check failed, 2 usage or config error,
// 3 an enumeration cap was exceeded where exhaustive work was demanded.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

#include "prstar/catalog.hpp"
#include "prstar/verify.hpp"

using namespace prstar;

namespace {

struct GlobalArgs {
  std::string config_path;
  std::size_t cap = 0;  // 0 = keep config default
  std::uint64_t seed = 0;
  std::string json_path;
  std::string csv_path;
  std::string catalog_path;

  Config config() const {
    Config cfg = config_path.empty() ? Config{} : Config::load(config_path);
    if (cap) cfg.caps.enumeration_cap = cap;
    if (seed) cfg.seed = seed;
    return cfg;
  }
};

// Group names: catalog labels, built-in families (S5, A6, D10, C12),
// products joined with 'x' (D6xD10) and wreaths C<m>wr<top> (C3wrS3).
GroupHandle resolve_group(const std::string& name,
                          const std::map<std::string, GroupHandle>& catalog,
                          const Caps& caps) {
  auto it = catalog.find(name);
  if (it != catalog.end()) return it->second;

  std::vector<std::string> parts;
  std::string cur;
  for (char c : name + "x") {
    if (c == 'x') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  auto parse_int = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(s, &pos);
      if (pos != s.size() || v < 1) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UnknownSelector("cannot parse group name '" + name + "'");
    }
  };
  std::function<GroupHandle(const std::string&)> parse_part =
      [&](const std::string& part) -> GroupHandle {
    auto cit = catalog.find(part);
    if (cit != catalog.end()) return cit->second;
    std::string::size_type wr = part.find("wr");
    if (wr != std::string::npos) {
      std::string head = part.substr(0, wr);
      if (head.empty() || head[0] != 'C')
        throw UnknownSelector("wreath base must be cyclic in '" + part + "'");
      int m = parse_int(head.substr(1));
      GroupHandle top = parse_part(part.substr(wr + 2));
      return wreath_product(m, top, caps).group;
    }
    if (part.size() < 2) throw UnknownSelector("cannot parse group name '" + part + "'");
    int n = parse_int(part.substr(1));
    switch (part[0]) {
      case 'C': return builtin_cyclic(n, caps);
      case 'D': return builtin_dihedral(n, caps);
      case 'S': return builtin_symmetric(n, caps);
      case 'A': return builtin_alternating(n, caps);
      default: throw UnknownSelector("cannot parse group name '" + part + "'");
    }
  };

  if (parts.empty()) throw UnknownSelector("empty group name");
  if (parts.size() == 1) return parse_part(parts[0]);
  std::vector<GroupHandle> factors;
  for (const std::string& p : parts) factors.push_back(parse_part(p));
  return direct_product(factors, caps, name).group;
}

std::map<std::string, GroupHandle> load_named_catalog(const GlobalArgs& ga,
                                                      const Caps& caps) {
  std::map<std::string, GroupHandle> out;
  if (!ga.catalog_path.empty())
    for (const GroupHandle& g : load_catalog(ga.catalog_path, caps))
      out[g->label()] = g;
  return out;
}

void write_json_maybe(const GlobalArgs& ga, const nlohmann::json& payload) {
  if (ga.json_path.empty()) return;
  std::ofstream out(ga.json_path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + ga.json_path);
  out << payload.dump(2) << "\n";
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint64_t> primes;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) primes.push_back(std::stoull(cur));
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return primes;
}

int emit_check_outcome(const CheckResult& res, const GlobalArgs& ga) {
  std::cout << "[" << to_string(res.status) << "] " << res.group_label
            << " :: " << res.check_id;
  if (!res.reason.empty()) std::cout << " (" << res.reason << ")";
  std::cout << "\n";
  if (ga.json_path.empty())
    std::cout << res.details.dump(2) << "\n";
  else
    write_json_maybe(ga, check_json(res));
  return res.status == CheckStatus::fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact commuting-probability toolkit for finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalArgs ga;
  app.add_option("--config", ga.config_path, "config file (key = value lines)");
  app.add_option("--cap", ga.cap, "override the element enumeration cap");
  app.add_option("--seed", ga.seed, "override the sampling seed");
  app.add_option("--json", ga.json_path, "write a JSON report to this path");
  app.add_option("--csv", ga.csv_path, "write a CSV report to this path");
  app.add_option("--catalog", ga.catalog_path, "catalog file or directory of .cat files");

  // group info
  CLI::App* group_cmd = app.add_subcommand("group", "group inspection");
  CLI::App* info_cmd = group_cmd->add_subcommand("info", "orders, series and structure");
  std::string info_group;
  info_cmd->add_option("--group", info_group, "group name or catalog label")->required();

  // prob pr / prob prstar
  CLI::App* prob_cmd = app.add_subcommand("prob", "commuting probabilities");
  CLI::App* pr_cmd = prob_cmd->add_subcommand("pr", "exact Pr(X,Y) by both formulas");
  std::string pr_group, pr_x = "full", pr_y = "full";
  pr_cmd->add_option("--group", pr_group)->required();
  pr_cmd->add_option("--x", pr_x, "subgroup selector for X");
  pr_cmd->add_option("--y", pr_y, "subgroup selector for Y");
  CLI::App* prstar_cmd = prob_cmd->add_subcommand("prstar", "Pr*(X,Y) report");
  std::string ps_group, ps_x = "full", ps_y = "full", ps_mode = "exhaustive";
  prstar_cmd->add_option("--group", ps_group)->required();
  prstar_cmd->add_option("--x", ps_x);
  prstar_cmd->add_option("--y", ps_y);
  prstar_cmd->add_option("--mode", ps_mode, "exhaustive | witness")
      ->check(CLI::IsMember({"exhaustive", "witness"}));

  // verify lemmas / example31 / example52
  CLI::App* verify_cmd = app.add_subcommand("verify", "machine checks");
  CLI::App* lemmas_cmd = verify_cmd->add_subcommand("lemmas", "corpus lemma battery");
  std::string lemmas_corpus;
  int lemmas_samples = 40;
  lemmas_cmd->add_option("--corpus", lemmas_corpus, "catalog directory to add to the corpus");
  lemmas_cmd->add_option("--samples", lemmas_samples, "sample count per sampled check");
  CLI::App* ex31_cmd = verify_cmd->add_subcommand("example31", "dihedral-product family");
  std::string ex31_primes = "3,5,7,11";
  ex31_cmd->add_option("--primes", ex31_primes, "comma-separated odd primes");
  CLI::App* ex52_cmd = verify_cmd->add_subcommand("example52", "wreath-product family");
  std::string ex52_primes = "7,11";
  std::string ex52_scale = "full-witness";
  ex52_cmd->add_option("--primes", ex52_primes, "comma-separated primes >= 7");
  ex52_cmd->add_option("--scale", ex52_scale, "model | full-witness")
      ->check(CLI::IsMember({"model", "full-witness"}));

  // report dashboard
  CLI::App* report_cmd = app.add_subcommand("report", "theorem dashboards");
  CLI::App* dash_cmd = report_cmd->add_subcommand("dashboard", "hypothesis/conclusion numbers");
  std::string dash_group, dash_theorem = "T1.1";
  int dash_k = 1;
  dash_cmd->add_option("--group", dash_group)->required();
  dash_cmd->add_option("--theorem", dash_theorem,
                       "T1.1 | T1.2 | T1.3 | T1.4 | T1.5 | L3.1 | P3.2 | L3.4");
  dash_cmd->add_option("--k", dash_k, "k for T1.3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Config cfg = ga.config();
    const Caps& caps = cfg.caps;
    std::map<std::string, GroupHandle> catalog = load_named_catalog(ga, caps);

    if (*info_cmd) {
      GroupHandle g = resolve_group(info_group, catalog, caps);
      StructureReport rep = structure_report(g, caps);
      nlohmann::json j = structure_report_json(rep);
      std::cout << g->label() << ": degree " << g->degree() << ", order "
                << g->order().str() << "\n"
                << "  pi = " << rep.primes.str() << ", nilpotent = " << rep.nilpotent
                << ", soluble = " << rep.soluble << "\n"
                << "  |gammaInf| = " << rep.gamma_inf.order().str()
                << ", |F| = " << rep.fitting1.order().str()
                << ", |F2| = " << rep.fitting2.order().str()
                << ", |F*| = " << rep.fstar.order().str()
                << ", |F2*| = " << rep.fstar2.order().str()
                << ", |R| = " << rep.radical.order().str() << "\n"
                << "  exp(G/F) = " << rep.exp_mod_fitting << "\n";
      write_json_maybe(ga, j);
      return 0;
    }

    if (*pr_cmd) {
      GroupHandle g = resolve_group(pr_group, catalog, caps);
      SubgroupRef X = resolve_selector(g, pr_x, caps);
      SubgroupRef Y = resolve_selector(g, pr_y, caps);
      Ratio via_pairs = pr_pair_count(X, Y);
      Ratio via_cents = pr_centralizer(X, Y);
      std::cout << "Pr(" << pr_x << ", " << pr_y << ") on " << g->label() << " = "
                << via_pairs.str() << "\n"
                << "  pair-count route:      " << via_pairs.str() << "\n"
                << "  centralizer-sum route: " << via_cents.str() << "\n"
                << "  |X| = " << X.order().str() << ", |Y| = " << Y.order().str() << "\n";
      if (via_pairs != via_cents) {
        std::cerr << "formula routes disagree\n";
        return 1;
      }
      write_json_maybe(ga, nlohmann::json{{"group", g->label()},
                                          {"x", pr_x},
                                          {"y", pr_y},
                                          {"value", ratio_json(via_pairs)}});
      return 0;
    }

    if (*prstar_cmd) {
      GroupHandle g = resolve_group(ps_group, catalog, caps);
      SubgroupRef X = resolve_selector(g, ps_x, caps);
      SubgroupRef Y = resolve_selector(g, ps_y, caps);
      PrStarReport rep = ps_mode == "exhaustive" ? pr_star(X, Y, caps)
                                                 : pr_star_single_witness(X, Y, caps);
      nlohmann::json j = prstar_json(rep);
      std::cout << j.dump(2) << "\n";
      write_json_maybe(ga, j);
      return 0;
    }

    if (*lemmas_cmd) {
      std::vector<GroupHandle> corpus = builtin_corpus(caps);
      if (!lemmas_corpus.empty())
        for (const GroupHandle& g : load_catalog(lemmas_corpus, caps))
          corpus.push_back(g);
      VerifyOptions opt;
      opt.seed = cfg.seed;
      opt.samples = lemmas_samples;
      opt.caps = caps;
      ReportDocument doc = verify_lemmas(corpus, opt);
      doc.config_snapshot = config_json(cfg);
      std::cout << report_text(doc);
      if (!ga.json_path.empty()) emit_report(doc, ga.json_path, "json");
      if (!ga.csv_path.empty()) emit_report(doc, ga.csv_path, "csv");
      return any_check_failed(doc) ? 1 : 0;
    }

    if (*ex31_cmd) {
      CheckResult res = example31(parse_prime_list(ex31_primes), caps);
      return emit_check_outcome(res, ga);
    }

    if (*ex52_cmd) {
      CheckResult res =
          example52(parse_prime_list(ex52_primes), ex52_scale == "full-witness", caps);
      return emit_check_outcome(res, ga);
    }

    if (*dash_cmd) {
      GroupHandle g = resolve_group(dash_group, catalog, caps);
      Dashboard d = make_dashboard(g, dash_theorem, dash_k, caps);
      nlohmann::json j = dashboard_json(d);
      std::cout << j.dump(2) << "\n";
      write_json_maybe(ga, j);
      return 0;
    }

    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const EnumerationCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
