// gitstab: combinatorial GIT stability for polarized curves.
//
// Subcommands: check, enumerate, blowup, contract, fiber, census.
// Input is a curve document (JSON); reports are JSON on standard output.
// Exit codes: 0 success, 1 malformed input, 2 precondition violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gitstab/gitstab.hpp"

namespace {

using nlohmann::json;
using namespace gitstab;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_report(const json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

json violations_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back({{"rule", v.rule}, {"detail", v.detail}});
  return arr;
}

json subcurve_json(const Subcurve& z) {
  json arr = json::array();
  for (const auto& id : z.component_ids) arr.push_back(id);
  return arr;
}

// graph structure must be sound before any curve-level question makes sense
void require_document_valid(const CurveGraph& g) {
  auto report = validate(g);
  if (report.empty()) return;
  std::string msg = "invalid curve graph:";
  for (const auto& v : report) msg += " [" + v.rule + ": " + v.detail + "]";
  throw ParseError(msg);
}

long long resolve_degree(const CurveDocument& doc, const std::optional<long long>& flag) {
  if (flag) return *flag;
  if (doc.degree) return *doc.degree;
  if (doc.multidegree) return doc.multidegree->total();
  throw ParseError("no degree given: use --degree or a 'degree'/'multidegree' entry");
}

BalanceFlavor parse_flavor(const std::string& name) {
  if (name == "balanced") return BalanceFlavor::Balanced;
  if (name == "properly-balanced") return BalanceFlavor::ProperlyBalanced;
  if (name == "strictly-balanced") return BalanceFlavor::StrictlyBalanced;
  if (name == "stably-balanced") return BalanceFlavor::StablyBalanced;
  throw ParseError("unknown flavor '" + name + "'");
}

int run_check(const std::string& input, bool lenient, bool pretty) {
  CurveDocument doc = parse_curve_document_text(read_input(input), lenient);
  json report;
  auto violations = validate(doc.graph);
  report["validation"] = violations_json(violations);
  if (!violations.empty()) {
    print_report(report, pretty);
    std::cerr << "error: curve document violates structural invariants\n";
    return 1;
  }
  if (!doc.multidegree)
    throw ParseError("check needs a 'multidegree' entry");

  int g = arithmetic_genus(doc.graph);
  report["genus"] = g;
  CurveClass cls = classify_curve(doc.graph);
  json tails = json::array();
  for (const auto& t : cls.elliptic_tails) tails.push_back(subcurve_json(t));
  report["curve"] = {{"stable", cls.is_stable},
                     {"p_stable", cls.is_p_stable},
                     {"quasi_stable", cls.is_quasi_stable},
                     {"quasi_p_stable", cls.is_quasi_p_stable},
                     {"elliptic_tails", tails}};

  PolarizedCurve pc{doc.graph, *doc.multidegree};
  long long d = pc.multidegree.total();
  report["degree"] = d;
  report["regime"] = regime_name(regime(d, g));
  report["geometric_quotient"] = geometric_quotient(d, g);

  BalanceClassification bc = classify_multidegree(pc);
  report["flavor"] = flavor_name(bc.flavor);
  if (bc.witness) {
    json witness;
    witness["components"] = subcurve_json(*bc.witness);
    // margins of the witness inequality, scaled by 2(2g-2): exact integers
    BasicInequalityResult r = basic_inequality(pc, *bc.witness);
    witness["scaled_deviation"] = r.scaled_deviation;
    witness["scaled_bound"] = r.scaled_bound;
    report["flavor_witness"] = witness;
  }

  GitDecision dec = decide(pc);
  json decision = {{"status", status_name(dec.status)}, {"reason", dec.reason}};
  if (dec.witness) decision["witness"] = subcurve_json(*dec.witness);
  if (dec.necessary) {
    json reasons = json::array();
    for (const auto& r : dec.necessary->reasons) reasons.push_back(r);
    decision["necessary_conditions"] = {{"passes", dec.necessary->passes},
                                        {"reasons", reasons}};
  }
  report["decision"] = decision;
  print_report(report, pretty);
  return 0;
}

int run_enumerate(const std::string& input, bool lenient, bool pretty,
                  const std::optional<long long>& degree_flag, const std::string& flavor,
                  bool positive) {
  CurveDocument doc = parse_curve_document_text(read_input(input), lenient);
  require_document_valid(doc.graph);
  long long d = resolve_degree(doc, degree_flag);
  BalanceFlavor want = parse_flavor(flavor);
  auto result = enumerate_multidegrees(doc.graph, d, want, positive);
  json report;
  report["degree"] = d;
  report["flavor"] = flavor_name(want);
  report["positive"] = positive;
  report["count"] = result.size();
  report["multidegrees"] = json::array();
  for (const auto& md : result)
    report["multidegrees"].push_back(multidegree_by_id(doc.graph, md));
  print_report(report, pretty);
  return 0;
}

int run_blowup(const std::string& input, bool lenient, bool pretty,
               const std::string& nodes, const std::vector<std::string>& cusps,
               bool all_nodes, bool all_cusps) {
  CurveDocument doc = parse_curve_document_text(read_input(input), lenient);
  require_document_valid(doc.graph);
  BlowUpSelection sel;
  if (all_nodes) {
    for (size_t e = 0; e < doc.graph.edges().size(); ++e)
      sel.node_edges.push_back(static_cast<int>(e));
  } else if (!nodes.empty()) {
    std::stringstream ss(nodes);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        sel.node_edges.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError("--nodes expects a comma-separated list of edge indices");
      }
    }
  }
  if (all_cusps) {
    for (const Vertex& v : doc.graph.vertices())
      if (v.cusps > 0) sel.cusp_counts[v.id] = v.cusps;
  } else {
    for (const std::string& entry : cusps) {
      auto eq = entry.find('=');
      if (eq == std::string::npos)
        throw ParseError("--cusp expects id=count");
      std::string id = entry.substr(0, eq);
      int count = 0;
      try {
        count = std::stoi(entry.substr(eq + 1));
      } catch (const std::exception&) {
        throw ParseError("--cusp expects id=count");
      }
      sel.cusp_counts[id] = count;
    }
  }
  CurveGraph result = blow_up(doc.graph, sel);
  print_report(curve_document_json(result), pretty);
  return 0;
}

int run_contract(const std::string& input, bool lenient, bool pretty) {
  CurveDocument doc = parse_curve_document_text(read_input(input), lenient);
  require_document_valid(doc.graph);
  print_report(curve_document_json(contract_exceptional(doc.graph)), pretty);
  return 0;
}

int run_fiber(const std::string& input, bool lenient, bool pretty,
              const std::optional<long long>& degree_flag) {
  CurveDocument doc = parse_curve_document_text(read_input(input), lenient);
  require_document_valid(doc.graph);
  long long d = resolve_degree(doc, degree_flag);
  auto strata = fiber_strata(doc.graph, d);
  json report;
  report["degree"] = d;
  report["base"] = curve_document_json(doc.graph);
  report["count"] = strata.size();
  report["strata"] = json::array();
  for (const auto& s : strata)
    report["strata"].push_back({{"model", curve_document_json(s.model)},
                                {"multidegree", multidegree_by_id(s.model, s.multidegree)}});
  print_report(report, pretty);
  return 0;
}

int run_census(int genus, const std::string& type, int max_vertices, bool pretty) {
  CensusType t;
  if (type == "stable") t = CensusType::Stable;
  else if (type == "pstable" || type == "p-stable") t = CensusType::PStable;
  else throw ParseError("--type must be 'stable' or 'pstable'");
  auto graphs = census(genus, t, max_vertices);
  json report;
  report["genus"] = genus;
  report["type"] = type == "stable" ? "stable" : "pstable";
  report["max_vertices"] = max_vertices;
  report["count"] = graphs.size();
  report["graphs"] = json::array();
  for (const auto& g : graphs) report["graphs"].push_back(curve_document_json(g));
  print_report(report, pretty);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial GIT stability of polarized curves"};
  app.require_subcommand(1);

  std::string input = "-";
  bool pretty = false;
  bool lenient = false;
  long long degree_value = 0;
  bool degree_set = false;
  std::string flavor = "balanced";
  bool positive = false;
  std::string nodes;
  std::vector<std::string> cusps;
  bool all_nodes = false;
  bool all_cusps = false;
  int genus = 2;
  std::string census_type = "stable";
  int max_vertices = 1;

  auto add_common = [&](CLI::App* cmd, bool with_input = true) {
    if (with_input)
      cmd->add_option("--input", input, "curve document path, or - for standard input");
    cmd->add_flag("--pretty", pretty, "indent the JSON report");
    cmd->add_flag("--lenient", lenient, "accept unknown keys in the input document");
  };

  CLI::App* check = app.add_subcommand("check", "validate, classify and decide stability");
  add_common(check);

  CLI::App* enumerate = app.add_subcommand("enumerate", "list multidegrees of a given flavor");
  add_common(enumerate);
  enumerate->add_option("--degree", degree_value, "total degree d")->each([&](const std::string&) {
    degree_set = true;
  });
  enumerate->add_option("--flavor", flavor,
                        "balanced | properly-balanced | strictly-balanced | stably-balanced");
  enumerate->add_flag("--positive", positive, "restrict to strictly positive degrees");

  CLI::App* blowup = app.add_subcommand("blowup", "blow up selected nodes and cusps");
  add_common(blowup);
  blowup->add_option("--nodes", nodes, "comma-separated edge indices to blow up");
  blowup->add_option("--cusp", cusps, "id=count cusp selection (repeatable)");
  blowup->add_flag("--all-nodes", all_nodes, "blow up every node");
  blowup->add_flag("--all-cusps", all_cusps, "blow up every cusp");

  CLI::App* contract = app.add_subcommand("contract", "contract every exceptional component");
  add_common(contract);

  CLI::App* fiber = app.add_subcommand("fiber", "compactified-Jacobian fiber strata over a p-stable base");
  add_common(fiber);
  fiber->add_option("--degree", degree_value, "total degree d")->each([&](const std::string&) {
    degree_set = true;
  });

  CLI::App* census_cmd = app.add_subcommand("census", "isomorphism classes of (p-)stable curves");
  add_common(census_cmd, false);
  census_cmd->add_option("--genus", genus, "arithmetic genus (2..5)")->required();
  census_cmd->add_option("--type", census_type, "stable | pstable");
  census_cmd->add_option("--max-vertices", max_vertices, "component bound (1..2g-2)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::optional<long long> degree_flag;
  if (degree_set) degree_flag = degree_value;

  try {
    if (check->parsed()) return run_check(input, lenient, pretty);
    if (enumerate->parsed())
      return run_enumerate(input, lenient, pretty, degree_flag, flavor, positive);
    if (blowup->parsed())
      return run_blowup(input, lenient, pretty, nodes, cusps, all_nodes, all_cusps);
    if (contract->parsed()) return run_contract(input, lenient, pretty);
    if (fiber->parsed()) return run_fiber(input, lenient, pretty, degree_flag);
    if (census_cmd->parsed()) return run_census(genus, census_type, max_vertices, pretty);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
