// Command-line interface for the numerical monoid invariant library.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catena/json_io.hpp"
#include "catena/version.hpp"

namespace {

using catena::NumericalMonoid;
using nlohmann::json;

struct Options {
  std::string format = "text";
  int jobs = 0;
};

std::vector<int64_t> parse_generators(const std::string& spec) {
  std::vector<int64_t> gens;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      catena::fail(catena::errc::invalid_argument, "generator '" + item + "' is not an integer");
    }
    if (pos != item.size())
      catena::fail(catena::errc::invalid_argument, "generator '" + item + "' is not an integer");
    gens.push_back(v);
  }
  if (gens.empty()) catena::fail(catena::errc::empty_generators, "no generators given");
  for (size_t i = 1; i < gens.size(); ++i)
    if (gens[i] <= gens[i - 1])
      catena::fail(catena::errc::invalid_argument, "generators must be strictly ascending");
  return gens;
}

std::map<std::string, std::pair<int64_t, int64_t>> parse_grid(const std::string& spec) {
  std::map<std::string, std::pair<int64_t, int64_t>> grid;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const size_t eq = item.find('=');
    if (eq == std::string::npos)
      catena::fail(catena::errc::invalid_argument, "grid entry '" + item + "' is not name=value");
    const std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    const size_t dots = value.find("..");
    try {
      if (dots == std::string::npos) {
        const int64_t v = std::stoll(value);
        grid[name] = {v, v};
      } else {
        grid[name] = {std::stoll(value.substr(0, dots)), std::stoll(value.substr(dots + 2))};
      }
    } catch (const std::exception&) {
      catena::fail(catena::errc::invalid_argument, "grid entry '" + item + "' is not numeric");
    }
  }
  return grid;
}

int64_t grid_value(const std::map<std::string, std::pair<int64_t, int64_t>>& grid,
                   const std::string& key, int64_t fallback) {
  auto it = grid.find(key);
  return it == grid.end() ? fallback : it->second.first;
}

std::pair<int64_t, int64_t> grid_range(const std::map<std::string, std::pair<int64_t, int64_t>>& grid,
                                       const std::string& key, int64_t lo, int64_t hi) {
  auto it = grid.find(key);
  return it == grid.end() ? std::make_pair(lo, hi) : it->second;
}

std::string g_command_line;

json envelope(const std::string& command, const NumericalMonoid* M, json result, int64_t ms) {
  json env = {{"command", command},
              {"command_line", g_command_line},
              {"version", catena::kVersion},
              {"timing_ms", ms},
              {"result", std::move(result)}};
  if (M) {
    env["generators"] = M->input_generators();
    env["basis"] = M->generators();
    env["reduced"] = !M->basis_is_minimal();
    env["minimal_generators"] = M->minimal_generators();
  }
  return env;
}

std::string join64(const std::vector<int64_t>& v, const char* sep = ",") {
  std::string s;
  for (int64_t x : v) {
    if (!s.empty()) s += sep;
    s += std::to_string(x);
  }
  return s;
}

std::string coeffs_string(const catena::Factorization& z) { return "(" + join64(z.coeffs()) + ")"; }

void print_report_line(std::ostream& os, const char* name, const catena::InvariantReport& r) {
  os << "  " << name << r.value << "  [" << to_string(r.exactness) << ", " << to_string(r.method);
  if (r.scan_bound) os << ", bound=" << *r.scan_bound;
  if (r.heuristic_bound) os << ", heuristic-bound";
  os << "]\n";
}

void print_witness(std::ostream& os, const char* name, const std::optional<catena::ChainWitness>& w) {
  if (!w) return;
  os << "  " << name << " chain (bottleneck " << w->bottleneck;
  if (w->equal_length_flag)
    os << ", equal-length";
  else if (w->monotone_flag)
    os << ", monotone";
  os << "):\n";
  for (const auto& z : w->steps)
    os << "    " << coeffs_string(z) << "  length " << z.length() << "\n";
}

void emit(const Options& opt, const json& env, const std::string& text, const std::string& csv = "") {
  if (opt.format == "json")
    std::cout << env.dump(2) << "\n";
  else if (opt.format == "csv" && !csv.empty())
    std::cout << csv;
  else
    std::cout << text;
}

int sweep_exit_code(const catena::experiments::SweepReport& report, bool verifying) {
  return verifying && !report.counterexamples.empty() ? 1 : 0;
}

void print_sweep_text(std::ostream& os, const catena::experiments::SweepReport& report) {
  os << report.id << "\n";
  os << "points: " << report.points_total() << "  failed: " << report.points_failed()
     << "  support_ratio: " << report.support_ratio() << "\n";
  for (const auto& [key, value] : report.summary) os << "  " << key << ": " << value << "\n";
  for (const auto& ce : report.counterexamples) {
    os << "counterexample:";
    for (const auto& [name, value] : ce.params) os << " " << name << "=" << value;
    os << "  claim: " << ce.claim << "  expected " << ce.expected << "  actual " << ce.actual << "\n";
  }
}

void write_sweep_output(const catena::experiments::SweepReport& report, const std::string& out_path,
                        catena::experiments::SweepWriter* writer) {
  if (out_path.empty()) return;
  // When a streaming writer was active the row file is already on disk;
  // always (re)write the counterexample sibling.
  if (!writer) {
    std::ofstream rows(out_path);
    if (!rows) catena::fail(catena::errc::invalid_argument, "cannot open " + out_path);
    catena::experiments::write_sweep_csv(report, rows);
  }
  std::ofstream ces(out_path + ".counterexamples.csv");
  catena::experiments::write_counterexample_csv(report, ces);
}

int run(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) {
    if (i) g_command_line += ' ';
    g_command_line += argv[i];
  }
  CLI::App app{"factorization invariants of numerical monoids"};
  app.require_subcommand(1);
  app.fallthrough(true);  // global options may follow the subcommand
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", opt.jobs, "worker threads for sweeps (0 = hardware)");

  std::string gens_spec, grid_spec, out_path, element_spec;
  bool with_witness = false, verify = false, resume = false;
  int64_t element = -1, scan_bound = -1, bound = -1;
  int64_t fa = 0, fd = 0, fk = 0, fh = 0, fn = 0, fx = 0, a_min = 4, a_max = 20;

  auto* cmd_fact = app.add_subcommand("factorizations", "enumerate Z(m)");
  cmd_fact->add_option("--gens", gens_spec)->required();
  cmd_fact->add_option("--element", element)->required();

  auto* cmd_inv = app.add_subcommand("invariants", "element or set-level invariants");
  cmd_inv->add_option("--gens", gens_spec)->required();
  cmd_inv->add_option("--element", element_spec);
  cmd_inv->add_flag("--witness", with_witness);
  cmd_inv->add_option("--scan-bound", scan_bound);

  auto* cmd_set = app.add_subcommand("set-invariants", "set-level invariants");
  cmd_set->add_option("--gens", gens_spec)->required();
  cmd_set->add_option("--scan-bound", scan_bound);

  auto* cmd_betti = app.add_subcommand("betti", "Betti elements");
  cmd_betti->add_option("--gens", gens_spec)->required();

  auto* cmd_family = app.add_subcommand("family", "family constructors and closed forms");
  cmd_family->require_subcommand(1);
  auto* fam_arith = cmd_family->add_subcommand("arithmetic", "a, a+d, ..., a+kd");
  fam_arith->add_option("--a", fa)->required();
  fam_arith->add_option("--d", fd)->required();
  fam_arith->add_option("--k", fk)->required();
  fam_arith->add_flag("--verify", verify);
  fam_arith->add_option("--bound", bound);
  auto* fam_gen = cmd_family->add_subcommand("gen-arith", "a, ah+d, ah+2d");
  fam_gen->set_help_flag("--help", "print help");  // frees -h for the family parameter
  fam_gen->add_option("--a", fa)->required();
  fam_gen->add_option("--h", fh)->required();
  fam_gen->add_option("--d", fd)->required();
  fam_gen->add_flag("--verify", verify);
  fam_gen->add_option("--bound", bound);
  auto* fam_gap = cmd_family->add_subcommand("gap", "na, na+n, 2na+nx+1");
  fam_gap->add_option("--n", fn)->required();
  fam_gap->add_option("--a", fa)->required();
  fam_gap->add_option("--x", fx)->required();
  auto* fam_frob = cmd_family->add_subcommand("frobenius", "a, a+1, a^2-a-1");
  fam_frob->add_option("--a", fa)->required();

  auto* cmd_sweep = app.add_subcommand("sweep", "verification and conjecture sweeps");
  cmd_sweep->require_subcommand(1);
  auto* sw_t1 = cmd_sweep->add_subcommand("theorem1", "monotone == max(equivalent, adjacent)");
  sw_t1->add_option("--gens", gens_spec);
  sw_t1->add_option("--grid", grid_spec);
  sw_t1->add_option("--out", out_path);
  sw_t1->add_flag("--resume", resume);
  auto* sw_ar = cmd_sweep->add_subcommand("arithmetic", "arithmetic family verification suite");
  sw_ar->add_option("--grid", grid_spec);
  sw_ar->add_option("--out", out_path);
  sw_ar->add_flag("--resume", resume);
  auto* sw_c12 = cmd_sweep->add_subcommand("conjecture1-2", "generalized arithmetic case split");
  sw_c12->add_option("--grid", grid_spec);
  sw_c12->add_option("--out", out_path);
  sw_c12->add_flag("--resume", resume);
  auto* sw_c3 = cmd_sweep->add_subcommand("conjecture3", "length +1 witness search");
  sw_c3->add_option("--grid", grid_spec);
  sw_c3->add_option("--out", out_path);
  sw_c3->add_flag("--resume", resume);
  auto* sw_si = cmd_sweep->add_subcommand("strict-inequality", "strict inequality hypotheses");
  sw_si->add_option("--gens", gens_spec)->required();
  sw_si->add_option("--grid", grid_spec);
  sw_si->add_option("--out", out_path);

  auto* cmd_fig = app.add_subcommand("figure", "figure data emitters");
  cmd_fig->require_subcommand(1);
  auto* fig_frob = cmd_fig->add_subcommand("frobenius", "a, a+1, a^2-a-1 family table");
  fig_frob->add_option("--a-min", a_min);
  fig_frob->add_option("--a-max", a_max);
  fig_frob->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  if (cmd_fact->parsed()) {
    NumericalMonoid M = NumericalMonoid::with_basis(parse_generators(gens_spec));
    const auto fs = catena::enumerate(M, element);
    std::ostringstream text, csv;
    text << "Z(" << element << ") in <" << join64(M.generators()) << ">: " << fs.size()
         << " factorization" << (fs.size() == 1 ? "" : "s") << "\n";
    csv << "coeffs,length\n";
    for (const auto& z : fs.all()) {
      text << "  " << coeffs_string(z) << "  length " << z.length() << "\n";
      csv << '"' << join64(z.coeffs()) << "\"," << z.length() << "\n";
    }
    emit(opt, envelope("factorizations", &M, fs, elapsed_ms()), text.str(), csv.str());
    return 0;
  }

  if (cmd_inv->parsed() || cmd_set->parsed()) {
    NumericalMonoid M = NumericalMonoid::with_basis(parse_generators(gens_spec));
    std::optional<int64_t> sb;
    if (scan_bound >= 0) sb = scan_bound;
    if (cmd_inv->parsed() && !element_spec.empty()) {
      const int64_t m = std::stoll(element_spec);
      const auto inv = catena::element_invariants(M, m, with_witness);
      std::ostringstream text;
      text << "element " << m << " in <" << join64(M.generators()) << ">\n"
           << "  factorizations: " << inv.factorization_count << "\n"
           << "  lengths: " << join64(inv.profile.lengths, " ") << "  (min " << inv.profile.min_length
           << ", max " << inv.profile.max_length << ")\n"
           << "  delta: " << (inv.profile.delta.empty() ? "-" : join64(inv.profile.delta, " ")) << "\n"
           << "  catenary:   " << inv.catenary << "\n"
           << "  equivalent: " << inv.equivalent << "\n"
           << "  adjacent:   " << inv.adjacent << "\n"
           << "  monotone:   " << inv.monotone << "\n";
      print_witness(text, "catenary", inv.catenary_witness);
      print_witness(text, "equivalent", inv.equivalent_witness);
      print_witness(text, "adjacent", inv.adjacent_witness);
      print_witness(text, "monotone", inv.monotone_witness);
      emit(opt, envelope("invariants", &M, inv, elapsed_ms()), text.str());
      return 0;
    }
    const auto set = catena::set_invariants(M, sb);
    json result = set;
    result["apery"] = M.apery();
    std::ostringstream text, csv;
    text << "monoid <" << join64(M.generators()) << ">";
    if (!M.basis_is_minimal()) text << "  (minimal generators: <" << join64(M.minimal_generators()) << ">)";
    text << "\n  frobenius:  " << set.frobenius << "\n";
    print_report_line(text, "catenary:   ", set.catenary);
    print_report_line(text, "equivalent: ", set.equivalent);
    print_report_line(text, "adjacent:   ", set.adjacent);
    print_report_line(text, "monotone:   ", set.monotone);
    text << "  betti: " << join64(set.betti.elements, " ") << "\n";
    csv << "invariant,value,exactness,method\n"
        << "catenary," << set.catenary.value << ',' << to_string(set.catenary.exactness) << ','
        << to_string(set.catenary.method) << "\n"
        << "equivalent," << set.equivalent.value << ',' << to_string(set.equivalent.exactness) << ','
        << to_string(set.equivalent.method) << "\n"
        << "adjacent," << set.adjacent.value << ',' << to_string(set.adjacent.exactness) << ','
        << to_string(set.adjacent.method) << "\n"
        << "monotone," << set.monotone.value << ',' << to_string(set.monotone.exactness) << ','
        << to_string(set.monotone.method) << "\n";
    emit(opt, envelope(cmd_inv->parsed() ? "invariants" : "set-invariants", &M, result, elapsed_ms()),
         text.str(), csv.str());
    return 0;
  }

  if (cmd_betti->parsed()) {
    NumericalMonoid M = NumericalMonoid::with_basis(parse_generators(gens_spec));
    const auto scan = catena::betti_elements(M);
    std::ostringstream text, csv;
    text << "betti elements of <" << join64(M.generators()) << ">: " << join64(scan.elements, " ")
         << "\n  scan bound " << scan.bound << " (coefficients " << join64(scan.coefficients, " ")
         << (scan.heuristic ? ", heuristic" : "") << ")\n";
    csv << "betti\n";
    for (int64_t b : scan.elements) csv << b << "\n";
    emit(opt, envelope("betti", &M, scan, elapsed_ms()), text.str(), csv.str());
    return 0;
  }

  if (cmd_family->parsed()) {
    using namespace catena::families;
    if (fam_arith->parsed()) {
      const auto fam = ArithmeticFamily::create(fa, fd, fk);
      json result = {{"a", fa},
                     {"d", fd},
                     {"k", fk},
                     {"generators", fam.monoid().generators()},
                     {"catenary_closed", fam.catenary_closed()},
                     {"move_element", fam.move_element()},
                     {"move_target", fam.move_target().coeffs()}};
      std::ostringstream text;
      text << "arithmetic family a=" << fa << " d=" << fd << " k=" << fk << "  <"
           << join64(fam.monoid().generators()) << ">\n"
           << "  catenary (closed form): " << fam.catenary_closed() << "\n"
           << "  move element b = " << fam.move_element() << ", target " << coeffs_string(fam.move_target())
           << "\n";
      int rc = 0;
      if (verify) {
        const auto report = catena::experiments::verify_arithmetic(
            fam, bound >= 0 ? bound : 400, opt.jobs);
        result["verify"] = report;
        print_sweep_text(text, report);
        rc = sweep_exit_code(report, true);
      }
      NumericalMonoid M = fam.monoid();
      emit(opt, envelope("family arithmetic", &M, result, elapsed_ms()), text.str());
      return rc;
    }
    if (fam_gen->parsed()) {
      const auto fam = GeneralizedArithmeticFamily::create(fa, fh, fd);
      const int64_t ceq = gen_arith_equivalent_closed(fam);
      json result = {{"a", fa},
                     {"h", fh},
                     {"d", fd},
                     {"generators", fam.monoid().generators()},
                     {"equivalent_closed", ceq},
                     {"equivalent_dim3", catena::dim3_equivalent_closed(fam.monoid())}};
      std::ostringstream text;
      text << "generalized arithmetic family a=" << fa << " h=" << fh << " d=" << fd << "  <"
           << join64(fam.monoid().generators()) << ">\n"
           << "  equivalent (closed form): " << ceq << "\n";
      int rc = 0;
      if (verify) {
        const auto rep = catena::monoid_catenary(fam.monoid());
        result["catenary_betti_scan"] = rep;
        text << "  catenary (Betti scan): " << rep.value << "\n";
      }
      NumericalMonoid M = fam.monoid();
      emit(opt, envelope("family gen-arith", &M, result, elapsed_ms()), text.str());
      return rc;
    }
    if (fam_gap->parsed()) {
      const auto fam = GapFamily::create(fn, fa, fx);
      const auto inv = gap_family_invariants(fam);
      json result = {{"n", fn},
                     {"a", fa},
                     {"x", fx},
                     {"generators", fam.monoid().generators()},
                     {"equivalent", inv.c_eq},
                     {"adjacent", inv.c_adj},
                     {"monotone", inv.c_mon},
                     {"catenary", inv.c},
                     {"adjacent_below_equivalent", inv.adj_below_eq},
                     {"monotone_exceeds_catenary", inv.mon_exceeds_c}};
      std::ostringstream text;
      text << "gap family n=" << fn << " a=" << fa << " x=" << fx << "  <"
           << join64(fam.monoid().generators()) << ">\n"
           << "  equivalent (closed form): " << inv.c_eq << "\n"
           << "  adjacent (observed <= " << *inv.c_adj.scan_bound << "): " << inv.c_adj.value << "\n"
           << "  monotone: " << inv.c_mon << "\n"
           << "  catenary (Betti scan): " << inv.c.value << "\n";
      NumericalMonoid M = fam.monoid();
      emit(opt, envelope("family gap", &M, result, elapsed_ms()), text.str());
      return (inv.adj_below_eq && inv.mon_exceeds_c) ? 0 : 1;
    }
    if (fam_frob->parsed()) {
      const auto fam = FrobeniusFamily::create(fa);
      const auto inv = frobenius_family_invariants(fam);
      json result = {{"a", fa},
                     {"x", fam.x()},
                     {"generators", fam.monoid().generators()},
                     {"betti", inv.betti},
                     {"betti_closed", inv.betti_closed},
                     {"catenary", inv.c},
                     {"catenary_closed", inv.c_closed},
                     {"monotone", inv.c_mon},
                     {"monotone_closed", inv.c_mon_closed},
                     {"adjacent", inv.c_adj},
                     {"gap", inv.gap},
                     {"gap_formula_derived", inv.gap_formula_derived},
                     {"gap_formula_printed", inv.gap_formula_printed}};
      std::ostringstream text;
      text << "frobenius family a=" << fa << "  <" << join64(fam.monoid().generators()) << ">\n"
           << "  betti: " << join64(inv.betti, " ") << "  (closed form " << join64(inv.betti_closed, " ")
           << ")\n"
           << "  catenary: " << inv.c << "  (closed form " << inv.c_closed << ")\n"
           << "  monotone: " << inv.c_mon << "  (closed form " << inv.c_mon_closed << ")\n"
           << "  gap: " << inv.gap << "  (a^2-4a+2 = " << inv.gap_formula_derived << ", printed form a^2-4a-4 = "
           << inv.gap_formula_printed << ")\n";
      NumericalMonoid M = fam.monoid();
      emit(opt, envelope("family frobenius", &M, result, elapsed_ms()), text.str());
      return 0;
    }
  }

  if (cmd_sweep->parsed()) {
    using namespace catena::experiments;
    const auto grid = parse_grid(grid_spec);
    SweepReport report;
    bool verifying = true;
    std::unique_ptr<SweepWriter> writer;

    if (sw_t1->parsed()) {
      const int64_t b = grid_value(grid, "bound", 400);
      if (!gens_spec.empty()) {
        NumericalMonoid M = NumericalMonoid::with_basis(parse_generators(gens_spec));
        report = verify_theorem1(M, b, opt.jobs);
      } else {
        report = verify_theorem1_random(static_cast<int>(grid_value(grid, "count", 50)),
                                        static_cast<int>(grid_value(grid, "kmin", 2)),
                                        static_cast<int>(grid_value(grid, "kmax", 4)),
                                        grid_value(grid, "maxgen", 30),
                                        static_cast<uint64_t>(grid_value(grid, "seed", 1207)), b,
                                        opt.jobs);
      }
    } else if (sw_ar->parsed()) {
      const auto [a_lo, a_hi] = grid_range(grid, "a", 3, 12);
      const auto [d_lo, d_hi] = grid_range(grid, "d", 1, 4);
      if (!out_path.empty())
        writer = std::make_unique<SweepWriter>(
            out_path, std::vector<std::string>{"a", "d", "k"},
            std::vector<std::string>{"elements", "violations", "catenary_closed", "catenary_betti_scan"},
            resume);
      report = verify_arithmetic_grid(a_lo, a_hi, d_lo, d_hi, grid_value(grid, "k", 4),
                                      grid_value(grid, "bound", 400), opt.jobs, writer.get());
    } else if (sw_c12->parsed()) {
      verifying = false;
      const auto [a_lo, a_hi] = grid_range(grid, "a", 3, 8);
      const auto [h_lo, h_hi] = grid_range(grid, "h", 2, 5);
      const auto [d_lo, d_hi] = grid_range(grid, "d", 1, 6);
      if (!out_path.empty())
        writer = std::make_unique<SweepWriter>(
            out_path, std::vector<std::string>{"a", "h", "d"},
            std::vector<std::string>{"branch", "catenary", "equivalent", "adjacent_observed",
                                     "monotone_observed", "status"},
            resume);
      report = check_conjecture_1_2(a_lo, a_hi, h_lo, h_hi, d_lo, d_hi, opt.jobs, writer.get());
    } else if (sw_c3->parsed()) {
      verifying = false;
      const auto [a_lo, a_hi] = grid_range(grid, "a", 3, 5);
      const auto [h_lo, h_hi] = grid_range(grid, "h", 2, 3);
      const auto [d_lo, d_hi] = grid_range(grid, "d", 1, 3);
      if (!out_path.empty())
        writer = std::make_unique<SweepWriter>(
            out_path, std::vector<std::string>{"a", "h", "d"},
            std::vector<std::string>{"pairs", "witness_found", "formula_defined", "formula_witness",
                                     "status"},
            resume);
      report = check_conjecture_3(a_lo, a_hi, h_lo, h_hi, d_lo, d_hi, grid_value(grid, "bound", 250),
                                  opt.jobs, writer.get());
    } else if (sw_si->parsed()) {
      NumericalMonoid M = NumericalMonoid::with_basis(parse_generators(gens_spec));
      int64_t b = grid_value(grid, "bound", -1);
      if (b < 0)
        b = M.dim() == 3
                ? catena::checked_add(catena::families::dim3_dissonance_bound(M), M.generators().back())
                : catena::default_scan_bound(M);
      report = strict_inequality_conditions(M, b, opt.jobs);
    }

    write_sweep_output(report, out_path, writer.get());
    std::ostringstream text;
    print_sweep_text(text, report);
    emit(opt, envelope("sweep", nullptr, report, elapsed_ms()), text.str());
    return sweep_exit_code(report, verifying);
  }

  if (cmd_fig->parsed() && fig_frob->parsed()) {
    const auto rows = catena::experiments::figure_frobenius_family(a_min, a_max, opt.jobs);
    std::ostringstream csv;
    catena::experiments::write_figure_csv(rows, csv);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) catena::fail(catena::errc::invalid_argument, "cannot open " + out_path);
      out << csv.str();
    }
    std::ostringstream text;
    text << "a  catenary  monotone  gap\n";
    for (const auto& r : rows)
      text << r.a << "  " << r.c << "  " << r.c_mon << "  " << r.gap << "\n";
    emit(opt, envelope("figure frobenius", nullptr, rows, elapsed_ms()), text.str(), csv.str());
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const catena::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 3;
  } catch (const catena::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
