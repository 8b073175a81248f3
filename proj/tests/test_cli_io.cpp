#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "prstar/catalog.hpp"
#include "prstar/config.hpp"
#include "prstar/report.hpp"
#include "prstar/selector.hpp"
#include "prstar/verify.hpp"

using namespace prstar;

TEST_CASE("config parsing") {
  std::istringstream in(
      "# comment\n"
      "enumerationCap = 1000\n"
      "cosetDegreeCap = 50   # trailing comment\n"
      "seed = 99\n"
      "outputFormat = json\n");
  Config cfg = Config::parse(in);
  CHECK(cfg.caps.enumeration_cap == 1000);
  CHECK(cfg.caps.coset_degree_cap == 50);
  CHECK(cfg.caps.sylow_enum_cap == 20000);  // default kept
  CHECK(cfg.seed == 99);
  CHECK(cfg.output_format == "json");

  std::istringstream bad("unknownKey = 3\n");
  CHECK_THROWS_AS(Config::parse(bad), IoFailure);
  std::istringstream bad2("outputFormat = yaml\n");
  CHECK_THROWS_AS(Config::parse(bad2), IoFailure);
  std::istringstream empty("");
  CHECK(Config::parse(empty).caps.enumeration_cap == 200000);
}

TEST_CASE("catalog parsing") {
  std::istringstream in(
      "# a comment\n"
      "group S4\n"
      "degree 4\n"
      "gen (1 2)\n"
      "gen (1 2 3 4)\n"
      "end\n"
      "\n"
      "group K\n"
      "degree 4\n"
      "gen (1 2)(3 4)\n"
      "gen (1 3)(2 4)\n"
      "end\n");
  std::vector<GroupHandle> groups = load_catalog_stream(in, "<test>");
  REQUIRE(groups.size() == 2);
  CHECK(groups[0]->label() == "S4");
  CHECK(groups[0]->order() == 24);
  CHECK(groups[1]->order() == 4);

  std::istringstream empty("# nothing\n");
  CHECK(load_catalog_stream(empty, "<test>").empty());

  std::istringstream bad_point(
      "group X\ndegree 4\ngen (1 7)\nend\n");
  CHECK_THROWS_WITH(load_catalog_stream(bad_point, "<test>"),
                    Catch::Matchers::ContainsSubstring("<test>:3"));

  std::istringstream dup(
      "group X\ndegree 3\ngen (1 2)\nend\n"
      "group X\ndegree 3\ngen (1 3)\nend\n");
  CHECK_THROWS_AS(load_catalog_stream(dup, "<test>"), DuplicateLabel);

  std::istringstream unterminated("group X\ndegree 3\ngen (1 2)\n");
  CHECK_THROWS_AS(load_catalog_stream(unterminated, "<test>"), IoFailure);
}

TEST_CASE("catalog file loading") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "prstar_cat_test";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "one.cat");
    out << "group C5\ndegree 5\ngen (1 2 3 4 5)\nend\n";
  }
  std::vector<GroupHandle> groups = load_catalog((dir / "one.cat").string());
  REQUIRE(groups.size() == 1);
  CHECK(groups[0]->order() == 5);

  // directory loading picks up .cat files
  std::vector<GroupHandle> from_dir = load_catalog(dir.string());
  CHECK(from_dir.size() == 1);

  CHECK_THROWS_AS(load_catalog((dir / "absent.cat").string()), IoFailure);
  fs::remove_all(dir);
}

TEST_CASE("selectors") {
  GroupHandle s4 = builtin_symmetric(4);
  CHECK(resolve_selector(s4, "full").order() == 24);
  CHECK(resolve_selector(s4, "trivial").order() == 1);
  CHECK(resolve_selector(s4, "syl:2").order() == 8);
  CHECK(resolve_selector(s4, "syl:3").order() == 3);
  CHECK(resolve_selector(s4, "F").order() == 4);
  CHECK(resolve_selector(s4, "F2").order() == 12);
  CHECK(resolve_selector(s4, "Fstar").order() == 4);
  CHECK(resolve_selector(s4, "Fstar2").order() == 12);
  CHECK(resolve_selector(s4, "radical").order() == 24);
  CHECK(resolve_selector(s4, "gamma:2").order() == 12);
  CHECK(resolve_selector(s4, "gammaInf").order() == 12);
  CHECK(resolve_selector(s4, "hall:2'").order() == 3);
  CHECK(resolve_selector(s4, "hall:{2,3}").order() == 24);
  CHECK(resolve_selector(s4, "gens:(1 2)(3 4),(1 3)(2 4)").order() == 4);

  DirectProduct dp = direct_product({builtin_dihedral(6), builtin_dihedral(10)});
  CHECK(resolve_selector(dp.group, "gammaInf").order() == 15);

  GroupHandle a5 = builtin_alternating(5);
  CHECK_THROWS_AS(resolve_selector(a5, "hall:{3,5}"), NotSoluble);
  CHECK_THROWS_AS(resolve_selector(s4, "widget"), UnknownSelector);
  CHECK_THROWS_AS(resolve_selector(s4, "syl:x"), UnknownSelector);
}

TEST_CASE("report emission is byte-stable") {
  namespace fs = std::filesystem;
  std::vector<GroupHandle> slice{builtin_symmetric(3), builtin_dihedral(8)};
  VerifyOptions opt;
  opt.seed = 3;
  opt.samples = 8;
  ReportDocument doc = verify_lemmas(slice, opt);
  doc.config_snapshot = config_json(Config{});
  doc.dashboards.push_back(make_dashboard(builtin_symmetric(4), "T1.4"));

  fs::path dir = fs::temp_directory_path() / "prstar_report_test";
  fs::create_directories(dir);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  emit_report(doc, (dir / "a.json").string(), "json");
  emit_report(doc, (dir / "b.json").string(), "json");
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));

  ReportDocument doc2 = verify_lemmas(slice, opt);
  doc2.config_snapshot = config_json(Config{});
  doc2.dashboards.push_back(make_dashboard(builtin_symmetric(4), "T1.4"));
  emit_report(doc2, (dir / "c.json").string(), "json");
  CHECK(slurp(dir / "a.json") == slurp(dir / "c.json"));

  // json round trip through the parser
  ReportDocument parsed = parse_report(slurp(dir / "a.json"));
  CHECK(serialize_report(parsed) == slurp(dir / "a.json"));

  emit_report(doc, (dir / "a.csv").string(), "csv");
  std::string csv = slurp(dir / "a.csv");
  CHECK(csv.find("check,D8,nilpotency-equivalence,status,pass") != std::string::npos);

  CHECK_THROWS_AS(emit_report(doc, (dir / "x.bin").string(), "yaml"), IoFailure);
  fs::remove_all(dir);
}

TEST_CASE("serialized key names are stable") {
  // structure report schema
  nlohmann::json s = structure_report_json(structure_report(builtin_symmetric(4)));
  for (const char* key : {"order", "pi", "gammaInf", "fitting", "fitting2", "fstar",
                          "fstar2", "radical", "nilpotent", "soluble", "expModFitting"})
    CHECK(s.contains(key));
  for (const char* key : {"order", "index", "generators"})
    CHECK(s["fitting"].contains(key));
  CHECK(s["fitting"]["generators"].is_array());

  // Pr* report schema
  nlohmann::json p = prstar_json(pr_star(builtin_symmetric(3)));
  CHECK(p.contains("value"));
  CHECK(p["value"].contains("num"));
  CHECK(p["value"].contains("den"));
  CHECK(p["value"]["num"].is_string());  // decimal strings, never floats
  CHECK(p.contains("lowerBoundOnly"));
  CHECK(p.contains("pairs"));
  for (const char* key : {"p", "q", "best", "witnessP", "witnessQ", "exhaustive"})
    CHECK(p["pairs"][0].contains(key));

  // dashboard schema
  nlohmann::json d = dashboard_json(make_dashboard(builtin_symmetric(4), "T1.3", 1));
  CHECK(d.contains("hypothesisEpsilon"));
  CHECK(d["conclusions"].contains("indexF2"));
  CHECK(d["conclusions"].contains("expGmodF"));
  CHECK(d["conclusions"].contains("indexF"));
  CHECK(d["conclusions"].contains("s"));
  CHECK(d["conclusions"]["witnessR"].contains("orderGammaK1R"));

  // ratio json round trip
  Ratio r(2842, 16807);
  CHECK(ratio_from_json(ratio_json(r)) == r);
  CHECK(ratio_json(r)["num"] == "58");
  CHECK(ratio_json(r)["den"] == "343");
}

TEST_CASE("repository catalog groups") {
  // located relative to the test binary: tests run from build/tests
  namespace fs = std::filesystem;
  fs::path candidates[] = {"../../data/catalog", "../data/catalog", "data/catalog"};
  fs::path found;
  for (const fs::path& c : candidates)
    if (fs::exists(c)) {
      found = c;
      break;
    }
  if (found.empty()) {
    WARN("repository catalog not found from the test working directory; skipping");
    return;
  }
  std::vector<GroupHandle> groups = load_catalog(found.string());
  REQUIRE(groups.size() >= 5);
  std::map<std::string, GroupHandle> by_label;
  for (const GroupHandle& g : groups) by_label[g->label()] = g;

  REQUIRE(by_label.count("SL25"));
  CHECK(by_label["SL25"]->order() == 120);
  CHECK(by_label["SL25"]->degree() == 24);
  CHECK(is_quasisimple(by_label["SL25"]));

  REQUIRE(by_label.count("A5xC6"));
  CHECK(by_label["A5xC6"]->order() == 360);
  CHECK(layer(by_label["A5xC6"]).order() == 60);

  REQUIRE(by_label.count("S3xQ8"));
  CHECK(by_label["S3xQ8"]->order() == 48);
  CHECK(fitting(by_label["S3xQ8"]).order() == 24);

  REQUIRE(by_label.count("Q8"));
  CHECK(by_label["Q8"]->order() == 8);
  CHECK(is_nilpotent(by_label["Q8"]));

  REQUIRE(by_label.count("SL23"));
  CHECK(by_label["SL23"]->order() == 24);
  CHECK(fitting(by_label["SL23"]).order() == 8);
}
