#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppart/acceptance.hpp"
#include "ppart/bounds.hpp"
#include "ppart/errors.hpp"
#include "ppart/hamsandwich.hpp"
#include "ppart/incidence.hpp"
#include "ppart/partition.hpp"
#include "ppart/poly.hpp"
#include "ppart/report.hpp"
#include "ppart/variety.hpp"
#include "ppart/veronese.hpp"

namespace {

using namespace ppart;

// Exit codes by failure category: 2 PARSE, 3 PRECOND, 4 SEARCH.
constexpr int kExitParse = 2;
constexpr int kExitPrecond = 3;
constexpr int kExitSearch = 4;

void emit(const Report& rep, const std::string& out_path) {
  if (out_path.empty())
    std::cout << rep.serialize();
  else
    rep.save(out_path);
}

std::map<std::string, long long> parse_params(const std::string& text) {
  std::map<std::string, long long> params;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("params: expected key=value, got " + item);
    try {
      params[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("params: bad integer in " + item);
    }
  }
  return params;
}

void fill_partition_report(Report& rep, const PartitionResult& res) {
  rep.set("stages", static_cast<long long>(res.realized_stages));
  std::string degs;
  for (const auto& g : res.stage_polynomials) {
    if (!degs.empty()) degs += ',';
    degs += std::to_string(g.degree().value_or(0));
  }
  rep.set("degrees", degs);
  rep.set("cell_count", static_cast<long long>(res.cells.size()));
  rep.set("max_cell", static_cast<long long>(res.max_cell));
  rep.set("residue_size", static_cast<long long>(res.residue.points.size()));
  rep.set("product_degree", static_cast<long long>(res.product_degree));
  rep.set("budget_check",
          res.product_degree <= res.budget ? "pass" : "fail");
  rep.set("truncated", res.truncated ? "yes" : "no");
  rep.set("kernel_branch", res.kernel_fired ? "yes" : "no");
  if (res.kernel_fired)
    rep.set("dim_check", res.dim_check_pass ? "pass" : "fail");
}

int run(int argc, char** argv) {
  CLI::App app{"polynomial partitioning and incidence toolkit"};
  app.require_subcommand(1);

  std::string points_path, variety_path, surfaces_path, out_path, report_path;
  std::string family, params_text, calc;
  int degree = 1, k = 2;
  std::uint64_t seed = 0;

  auto* cmd_partition = app.add_subcommand("partition", "iterated bisection partition in R^d");
  cmd_partition->add_option("--points", points_path)->required();
  cmd_partition->add_option("--degree", degree)->required();
  cmd_partition->add_option("--seed", seed);
  cmd_partition->add_option("--out", out_path);

  auto* cmd_variety = app.add_subcommand("partition-variety", "partition points lying on a variety");
  cmd_variety->add_option("--points", points_path)->required();
  cmd_variety->add_option("--variety", variety_path)->required();
  cmd_variety->add_option("--degree", degree)->required();
  cmd_variety->add_option("--seed", seed);
  cmd_variety->add_option("--out", out_path);

  std::vector<std::string> set_paths;
  auto* cmd_ham = app.add_subcommand("hamsandwich", "simultaneous bisection of several point sets");
  cmd_ham->add_option("--points", set_paths, "comma separated point files")
      ->required()
      ->delimiter(',');
  cmd_ham->add_option("--degree", degree)->required();
  cmd_ham->add_option("--seed", seed);
  cmd_ham->add_option("--out", out_path);

  auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert function value from point data");
  cmd_hilbert->add_option("--points", points_path)->required();
  cmd_hilbert->add_option("--degree", degree)->required();
  cmd_hilbert->add_option("--out", out_path);

  std::map<std::string, double> bound_flags;
  auto* cmd_bounds = app.add_subcommand("bounds", "closed-form bound calculators");
  cmd_bounds->add_option("calculator", calc,
                         "chardin_upper | chardin_philippon_lower | "
                         "prop2_lower | coprime_pair_bound | betti_bound")
      ->required();
  int b_deg = 1, b_e = 0, b_ell = 1, b_d = 2, b_delta = 1, b_delta1 = 1,
      b_delta2 = 1, b_degg = 1;
  std::string b_c = "1", b_degs;
  cmd_bounds->add_option("--deg", b_deg);
  cmd_bounds->add_option("--e", b_e);
  cmd_bounds->add_option("--ell", b_ell);
  cmd_bounds->add_option("--d", b_d);
  cmd_bounds->add_option("--delta", b_delta);
  cmd_bounds->add_option("--delta1", b_delta1);
  cmd_bounds->add_option("--delta2", b_delta2);
  cmd_bounds->add_option("--c", b_c, "rational constant, e.g. 1/2");
  cmd_bounds->add_option("--degs", b_degs, "comma separated degree list");
  cmd_bounds->add_option("--degg", b_degg);

  auto* cmd_incidence = app.add_subcommand("incidence", "count incidences and evaluate bounds");
  cmd_incidence->add_option("--family", family);
  cmd_incidence->add_option("--params", params_text, "k=v,...");
  cmd_incidence->add_option("--points", points_path);
  cmd_incidence->add_option("--surfaces", surfaces_path);
  cmd_incidence->add_option("--k", k);
  cmd_incidence->add_option("--seed", seed);
  cmd_incidence->add_option("--report", report_path);
  bool level1 = false;
  cmd_incidence->add_flag("--level1", level1,
                          "run the first-level partition pipeline");

  std::string points_out, surfaces_out;
  auto* cmd_generate = app.add_subcommand("generate", "write a generated instance to files");
  cmd_generate->add_option("--family", family)->required();
  cmd_generate->add_option("--params", params_text);
  cmd_generate->add_option("--seed", seed);
  cmd_generate->add_option("--points-out", points_out)->required();
  cmd_generate->add_option("--surfaces-out", surfaces_out)->required();

  auto* cmd_verify = app.add_subcommand("verify", "run acceptance suites or revalidate a report");
  cmd_verify->add_option("--report", report_path,
                         "round-trip an existing report instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  if (cmd_partition->parsed()) {
    const auto ps = load_points_file(points_path);
    const auto res = partition(ps, degree, seed);
    Report rep;
    rep.set("command", "partition");
    rep.set("points", points_path);
    rep.set("degree", static_cast<long long>(degree));
    rep.set("seed", static_cast<long long>(seed));
    fill_partition_report(rep, res);
    emit(rep, out_path);
  } else if (cmd_variety->parsed()) {
    const auto ps = load_points_file(points_path);
    const auto spec = load_variety_spec(variety_path);
    const auto res = partition_on_variety(ps, spec, degree, seed);
    Report rep;
    rep.set("command", "partition-variety");
    rep.set("points", points_path);
    rep.set("variety", variety_path);
    rep.set("degree", static_cast<long long>(degree));
    rep.set("seed", static_cast<long long>(seed));
    fill_partition_report(rep, res);
    emit(rep, out_path);
  } else if (cmd_ham->parsed()) {
    std::vector<PointSet> sets;
    for (const auto& path : set_paths) sets.push_back(load_points_file(path));
    auto [g, cut] = lift_and_bisect(sets, degree, seed);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path, std::ios::binary);
      if (!file) throw ParseError("cannot write: " + out_path);
      out = &file;
    }
    *out << serialize_polynomial(g) << "\n";
    for (std::size_t i = 0; i < cut.counts.size(); ++i)
      *out << "# set " << i << ": negative=" << cut.counts[i].negative
           << " zero=" << cut.counts[i].zero
           << " positive=" << cut.counts[i].positive << "\n";
  } else if (cmd_hilbert->parsed()) {
    const auto ps = load_points_file(points_path);
    const auto h = hilbert_from_points(ps, degree);
    Report rep;
    rep.set("command", "hilbert");
    rep.set("points", points_path);
    rep.set("degree", static_cast<long long>(degree));
    rep.set("value", static_cast<long long>(h.value));
    rep.set("rank_source", static_cast<long long>(h.rank_source));
    rep.set("saturated", h.saturated ? "yes" : "no");
    emit(rep, out_path);
  } else if (cmd_bounds->parsed()) {
    if (calc == "chardin_upper") {
      std::cout << chardin_upper(b_deg, b_e, b_ell) << "\n";
    } else if (calc == "chardin_philippon_lower") {
      std::cout << chardin_philippon_lower(b_deg, b_delta, b_d, b_e, b_ell)
                << "\n";
    } else if (calc == "prop2_lower") {
      const auto cval = parse_rational(b_c);
      if (!cval) throw ParseError("bounds: bad rational for --c: " + b_c);
      std::cout << format_rational(
                       prop2_lower(b_d, b_delta1, b_delta2, b_ell, *cval))
                << "\n";
    } else if (calc == "coprime_pair_bound") {
      std::cout << coprime_pair_bound(b_d, b_deg) << "\n";
    } else if (calc == "betti_bound") {
      std::vector<int> degs;
      std::stringstream ss(b_degs);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) degs.push_back(std::stoi(item));
      std::cout << betti_bound(degs, b_degg, b_d) << "\n";
    } else {
      throw ParseError("bounds: unknown calculator " + calc);
    }
  } else if (cmd_incidence->parsed()) {
    IncidenceInstance inst;
    if (!family.empty()) {
      inst = generate(family, parse_params(params_text), seed);
    } else {
      if (points_path.empty() || surfaces_path.empty())
        throw ParseError(
            "incidence: need either --family or --points with --surfaces");
      inst.points = load_points_file(points_path);
      inst.surfaces =
          load_polynomial_list_file(surfaces_path, inst.points.dimension);
      inst.k = k;
      for (const auto& h : inst.surfaces)
        inst.degree_cap = std::max(inst.degree_cap, h.degree().value_or(0));
    }
    if (level1) {
      emit(run_level1(inst, seed), report_path);
    } else {
      const long long m = static_cast<long long>(inst.points.points.size());
      const long long n = static_cast<long long>(inst.surfaces.size());
      const long long count = count_incidences(inst);
      const double bound =
          incidence_bound(m, n, inst.points.dimension, inst.k);
      Report rep;
      rep.set("command", "incidence");
      rep.set("family", inst.family.empty() ? "custom" : inst.family);
      rep.set("seed", static_cast<long long>(seed));
      rep.set("m", m);
      rep.set("n", n);
      rep.set("k", static_cast<long long>(inst.k));
      rep.set("count", count);
      rep.set("bound", bound);
      rep.set("ratio",
              bound > 0 ? static_cast<double>(count) / bound : 0.0);
      emit(rep, report_path);
    }
  } else if (cmd_generate->parsed()) {
    const auto inst = generate(family, parse_params(params_text), seed);
    std::ofstream pf(points_out, std::ios::binary);
    if (!pf) throw ParseError("cannot write: " + points_out);
    pf << serialize_points(inst.points);
    std::ofstream sf(surfaces_out, std::ios::binary);
    if (!sf) throw ParseError("cannot write: " + surfaces_out);
    sf << serialize_polynomial_list(inst.surfaces);
    std::cout << "m = " << inst.points.points.size()
              << "\nn = " << inst.surfaces.size()
              << "\nk = " << inst.k << "\ndegree_cap = " << inst.degree_cap
              << "\n";
  } else if (cmd_verify->parsed()) {
    if (!report_path.empty()) {
      const Report rep = Report::load(report_path);
      const Report again = Report::parse_string(rep.serialize());
      if (!(rep == again)) {
        std::cerr << "round trip mismatch\n";
        return 1;
      }
      std::cout << "report ok: " << rep.items().size() << " keys\n";
    } else {
      const int failures = run_acceptance(std::cout);
      return failures == 0 ? 0 : 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SearchExhausted& e) {
    std::cerr << "error category=SEARCH: " << e.what() << "\n";
    return kExitSearch;
  } catch (const ParseError& e) {
    std::cerr << "error category=PARSE: " << e.what() << "\n";
    return kExitParse;
  } catch (const PrecondError& e) {
    std::cerr << "error category=PRECOND: " << e.what() << "\n";
    return kExitPrecond;
  } catch (const std::exception& e) {
    std::cerr << "error category=PRECOND: " << e.what() << "\n";
    return kExitPrecond;
  }
}
