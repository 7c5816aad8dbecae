#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fuzzdep/decomposition.hpp"
#include "fuzzdep/dependency.hpp"
#include "fuzzdep/inference.hpp"
#include "fuzzdep/proximity.hpp"

namespace {

using namespace fuzzdep;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::SyntaxError, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    size_t b = current.find_first_not_of(" \t");
    if (b != std::string::npos) {
      size_t e = current.find_last_not_of(" \t");
      out.push_back(current.substr(b, e - b + 1));
    }
    current.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      current += c;
  }
  flush();
  return out;
}

struct GlobalOpts {
  double alpha = 0.5;
  std::string measure = "extended";
  std::string form;  // empty = per-measure default
  double beta_min = 0.0;
  std::string output = "text";

  ProximityConfig proximity() const {
    ProximityConfig cfg;
    if (measure == "liu")
      cfg.measure = Measure::liu;
    else if (measure == "improved")
      cfg.measure = Measure::improved;
    else
      cfg.measure = Measure::extended;
    if (form.empty())
      cfg.form = default_form(cfg.measure);
    else
      cfg.form = (form == "ratio") ? Form::ratio : Form::two_term;
    cfg.alpha = alpha;
    cfg.beta_min = beta_min;
    return cfg;
  }
  bool json() const { return output == "json"; }
};

void add_global_opts(CLI::App* cmd, GlobalOpts& g) {
  cmd->add_option("--alpha", g.alpha, "Cut degree for the extended measure")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--measure", g.measure, "Proximity measure")
      ->check(CLI::IsMember({"liu", "improved", "extended"}));
  cmd->add_option("--form", g.form, "Formula form")
      ->check(CLI::IsMember({"two-term", "ratio"}));
  cmd->add_option("--beta-min", g.beta_min, "Vacuity threshold for FMVD pairs")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--output", g.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

int run_sp(const std::string& v1_text, const std::string& v2_text, double lower, double upper,
           double theta_opt, const GlobalOpts& g) {
  auto dom = make_domain(lower, upper, theta_opt > 0 ? std::optional<double>(theta_opt)
                                                     : std::nullopt);
  FuzzyValue v1 = parse_cell(v1_text);
  FuzzyValue v2 = parse_cell(v2_text);
  ProximityConfig cfg = g.proximity();

  MaybeInterval f1, f2;
  bool extended = cfg.measure == Measure::extended;
  if (extended) {
    f1 = alpha_cut(v1, cfg.alpha, dom);
    f2 = alpha_cut(v2, cfg.alpha, dom);
  } else {
    f1 = to_interval(v1, dom);
    f2 = to_interval(v2, dom);
  }
  MaybeInterval inter = (f1 && f2) ? intersect(*f1, *f2) : std::nullopt;
  MaybeInterval hull = (f1 && f2) ? MaybeInterval(union_hull(*f1, *f2)) : std::nullopt;
  double value = sp_cell(v1, v2, dom, cfg);

  if (g.json()) {
    nlohmann::json j;
    j["value"] = value;
    j["measure"] = g.measure;
    j["intermediate"] = {
        {"f1", format_interval(f1)},
        {"f2", format_interval(f2)},
        {"intersection", format_interval(inter)},
        {"hull", format_interval(hull)},
        {"modular_intersection", modular(inter, dom, extended)},
        {"modular_hull", modular(hull, dom, extended)},
    };
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "sp = " << format_number(value) << "\n";
    std::cout << "  f1 = " << format_interval(f1) << "  f2 = " << format_interval(f2) << "\n";
    std::cout << "  intersection = " << format_interval(inter)
              << " (modular " << format_number(modular(inter, dom, extended)) << ")\n";
    std::cout << "  hull = " << format_interval(hull) << " (modular "
              << format_number(modular(hull, dom, extended)) << ")\n";
  }
  return 0;
}

int run_check(const std::string& kind, const std::string& file, const std::string& lhs_text,
              const std::string& rhs_text, const GlobalOpts& g) {
  Relation r = parse_relation(read_file(file));
  DependencyStatement d;
  d.kind = (kind == "ffd") ? DepKind::FFD : DepKind::FMVD;
  d.lhs = AttributeSet::resolve(r.schema, split_commas(lhs_text));
  d.rhs = AttributeSet::resolve(r.schema, split_commas(rhs_text));
  ProximityConfig cfg = g.proximity();
  CheckReport report =
      d.kind == DepKind::FFD ? check_ffd(r, d, cfg) : check_fmvd(r, d, cfg);

  if (g.json()) {
    std::cout << report_to_json(report).dump() << "\n";
  } else {
    std::cout << (kind == "ffd" ? "FFD " : "FMVD ") << lhs_text
              << (kind == "ffd" ? " -> " : " ->> ") << rhs_text << ": "
              << (report.holds ? "holds" : "violated") << "\n";
    if (report.vacuous_pairs > 0)
      std::cout << "  vacuous pairs: " << report.vacuous_pairs << "\n";
    for (const auto& v : report.violations) {
      std::cout << "  pair (" << v.i << "," << v.j << "): beta = " << format_number(v.beta);
      if (v.achieved) std::cout << ", rhs proximity = " << format_number(*v.achieved);
      if (v.best_witness)
        std::cout << ", best witness T" << v.best_witness->tuple_index << " reaches "
                  << format_number(v.best_witness->achieved) << " (fails "
                  << v.best_witness->failing_condition << ")";
      std::cout << "\n";
    }
  }
  return report.holds ? 0 : 1;
}

int run_closure(const std::string& file, const std::string& query, int max_depth,
                const GlobalOpts& g) {
  DependencySet ds = parse_dependency_set(read_file(file));
  SymbolicDep q = parse_query(ds, query);
  ClosureResult result = closure_contains(ds, q, max_depth);
  if (g.json()) {
    nlohmann::json j;
    j["derivable"] = result.derivable;
    j["query"] = format_statement(ds, q);
    if (result.trace) j["trace"] = trace_to_json(*result.trace);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << format_statement(ds, q) << ": "
              << (result.derivable ? "derivable" : "not derivable") << "\n";
    if (result.trace)
      for (const auto& step : result.trace->steps) {
        std::cout << "  " << step.rule << ": ";
        for (size_t i = 0; i < step.premises.size(); ++i)
          std::cout << (i ? "; " : "") << step.premises[i];
        std::cout << (step.premises.empty() ? "" : " ") << "|- " << step.conclusion << "\n";
      }
  }
  return result.derivable ? 0 : 1;
}

int run_basis(const std::string& file, const std::string& set_text, const GlobalOpts& g) {
  DependencySet ds = parse_dependency_set(read_file(file));
  AttrMask x = mask_of(ds, split_commas(set_text));
  std::vector<AttrMask> blocks = dependency_basis(ds, x);
  std::vector<std::vector<std::string>> named;
  for (AttrMask b : blocks) named.push_back(mask_names(ds, b));
  std::sort(named.begin(), named.end());
  if (g.json()) {
    nlohmann::json j;
    j["set"] = mask_names(ds, x);
    j["blocks"] = named;
    std::cout << j.dump() << "\n";
  } else {
    std::string line;
    for (const auto& block : named) {
      if (!line.empty()) line += " | ";
      line += "{";
      for (size_t i = 0; i < block.size(); ++i) line += (i ? "," : "") + block[i];
      line += "}";
    }
    std::cout << (line.empty() ? "(empty)" : line) << "\n";
  }
  return 0;
}

nlohmann::json tuples_to_json(const std::vector<Tuple>& tuples) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : tuples) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : t) row.push_back(format_cell(v));
    out.push_back(row);
  }
  return out;
}

int run_decompose(const std::string& file, const std::string& on_text,
                  const std::string& split_text, double beta_join, const GlobalOpts& g) {
  Relation r = parse_relation(read_file(file));
  AttributeSet x = AttributeSet::resolve(r.schema, split_commas(on_text));
  AttributeSet y = AttributeSet::resolve(r.schema, split_commas(split_text));
  LosslessReport report = lossless_check(r, x, y, JoinConfig{g.proximity(), beta_join});
  if (g.json()) {
    nlohmann::json j;
    j["lossless"] = report.lossless;
    j["joined_count"] = report.joined_count;
    j["extra"] = tuples_to_json(report.extra);
    j["missing"] = tuples_to_json(report.missing);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (report.lossless ? "lossless" : "not lossless") << " (" << report.joined_count
              << " joined tuples, " << report.extra.size() << " extra, " << report.missing.size()
              << " missing)\n";
  }
  return report.lossless ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy relational dependency toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  if (const char* env = std::getenv("FUZZDEP_OUTPUT")) g.output = env;

  auto* sp_cmd = app.add_subcommand("sp", "Semantic proximity of two cell values");
  std::string v1, v2;
  double lower = 0.0, upper = 100.0, theta = -1.0;
  sp_cmd->add_option("value1", v1, "First cell")->required();
  sp_cmd->add_option("value2", v2, "Second cell")->required();
  sp_cmd->add_option("--lower", lower, "Domain lower bound");
  sp_cmd->add_option("--upper", upper, "Domain upper bound");
  sp_cmd->add_option("--theta", theta, "Universe scope (default upper-lower)");
  add_global_opts(sp_cmd, g);

  auto* check_cmd = app.add_subcommand("check", "Check an FFD or FMVD against a relation");
  std::string kind, rel_file, lhs_text, rhs_text;
  check_cmd->add_option("kind", kind, "ffd or fmvd")
      ->required()
      ->check(CLI::IsMember({"ffd", "fmvd"}));
  check_cmd->add_option("relation", rel_file, "Relation JSON file")->required();
  check_cmd->add_option("--lhs", lhs_text, "Left-hand attributes (comma separated)")->required();
  check_cmd->add_option("--rhs", rhs_text, "Right-hand attributes (comma separated)")->required();
  add_global_opts(check_cmd, g);

  auto* closure_cmd = app.add_subcommand("closure", "Closure membership with derivation trace");
  std::string dep_file, query;
  int max_depth = 8;
  closure_cmd->add_option("deps", dep_file, "Dependency JSON file")->required();
  closure_cmd->add_option("--query", query, "Statement, e.g. \"A ->> C\"")->required();
  closure_cmd->add_option("--max-depth", max_depth, "Trace search depth")->check(CLI::Range(1, 64));
  add_global_opts(closure_cmd, g);

  auto* basis_cmd = app.add_subcommand("basis", "Dependency basis of an attribute set");
  std::string basis_deps, set_text;
  basis_cmd->add_option("deps", basis_deps, "Dependency JSON file")->required();
  basis_cmd->add_option("--set", set_text, "Attribute set (comma separated)")->required();
  add_global_opts(basis_cmd, g);

  auto* dec_cmd = app.add_subcommand("decompose", "Lossless decomposition check");
  std::string dec_file, on_text, split_text;
  double beta_join = 1.0;
  dec_cmd->add_option("relation", dec_file, "Relation JSON file")->required();
  dec_cmd->add_option("--on", on_text, "Shared attributes X")->required();
  dec_cmd->add_option("--split", split_text, "Split attributes Y")->required();
  dec_cmd->add_option("--beta-join", beta_join, "Join proximity threshold")
      ->check(CLI::Range(1e-9, 1.0));
  add_global_opts(dec_cmd, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sp_cmd->parsed()) return run_sp(v1, v2, lower, upper, theta, g);
    if (check_cmd->parsed()) return run_check(kind, rel_file, lhs_text, rhs_text, g);
    if (closure_cmd->parsed()) return run_closure(dep_file, query, max_depth, g);
    if (basis_cmd->parsed()) return run_basis(basis_deps, set_text, g);
    if (dec_cmd->parsed()) return run_decompose(dec_file, on_text, split_text, beta_join, g);
  } catch (const fuzzdep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
