// predual: exact workbench for hyperplane preduals of l1 inside c.
//
// Every number crossing this boundary is an exact rational "p/q"; decimal
// columns are display-only. Exit codes: 0 success, 1 a certified contract
// failed (the failing witness is printed), 2 malformed input or unknown
// command, 3 oracle dimension limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "predual/prng.hpp"
#include "predual/stability.hpp"

using json = nlohmann::ordered_json;
using namespace predual;

namespace {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Certificate {
  std::string name;
  bool ok = false;
  std::string witness;  // set when ok is false
};

struct Report {
  std::string command;
  std::map<std::string, std::string> inputs;
  json outputs = json::object();
  std::vector<Certificate> certificates;
  std::vector<std::string> lines;                       // human-readable stdout
  std::optional<std::vector<std::array<std::string, 3>>> csv;  // step, p, q
};

using Args = std::map<std::string, std::string>;

std::string require_arg(const Args& args, const std::string& key) {
  auto it = args.find(key);
  if (it == args.end() || it->second.empty())
    throw ConfigError("missing required field --" + key);
  return it->second;
}

std::optional<std::string> optional_arg(const Args& args, const std::string& key) {
  auto it = args.find(key);
  if (it == args.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

Rational parse_rational_field(const std::string& text, const std::string& field) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw ConfigError("invalid rational in --" + field + ": '" + text + "'");
  }
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& field) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational_field(item, field));
  return out;
}

int parse_int_field(const Args& args, const std::string& key, std::optional<int> fallback) {
  const auto raw = optional_arg(args, key);
  if (!raw) {
    if (fallback) return *fallback;
    throw ConfigError("missing required field --" + key);
  }
  try {
    std::size_t pos = 0;
    const int v = std::stoi(*raw, &pos);
    if (pos != raw->size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid integer in --" + key + ": '" + *raw + "'");
  }
}

std::uint64_t parse_seed(const Args& args) {
  const auto raw = optional_arg(args, "seed");
  if (!raw) return kDefaultSeed;
  try {
    return std::stoull(*raw);
  } catch (const std::exception&) {
    throw ConfigError("invalid integer in --seed: '" + *raw + "'");
  }
}

SummableSeq parse_functional(const Args& args, const std::string& key, bool required = true) {
  const auto raw = optional_arg(args, key);
  if (!raw) {
    if (required) throw ConfigError("missing required field --" + key);
    return SummableSeq::zero();
  }
  return SummableSeq::from_dense(parse_rational_list(*raw, key));
}

HyperplaneSpec renormed_spec_from(const Args& args) {
  const int n = parse_int_field(args, "n", std::nullopt);
  const auto alpha_raw = optional_arg(args, "alpha");
  if (alpha_raw) {
    const auto alpha = SummableSeq::from_dense(parse_rational_list(*alpha_raw, "alpha"));
    try {
      return HyperplaneSpec::renormed(alpha, n);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  // No alpha: build the alternating-sign head carrying mass r over 1..n.
  const Rational r = parse_rational_field(require_arg(args, "r"), "r");
  SummableSeq alpha;
  for (int i = 1; i <= n; ++i) alpha.set(i, (i % 2 ? r : -r) / Rational(n));
  try {
    return HyperplaneSpec::renormed(alpha, n);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::string displacement_csv_header() { return "step,displacement_p,displacement_q"; }

void fill_displacement_csv(Report& report, const std::vector<Rational>& displacements) {
  report.csv = std::vector<std::array<std::string, 3>>{};
  for (std::size_t k = 0; k < displacements.size(); ++k) {
    report.csv->push_back({std::to_string(k), displacements[k].numerator().get_str(),
                           displacements[k].denominator().get_str()});
  }
}

json rational_json(const Rational& v) { return v.str(); }

// ---------------------------------------------------------------- commands

Report cmd_norm_eval(const Args& args) {
  Report report;
  const auto spec = renormed_spec_from(args);
  const auto prefix = parse_rational_list(require_arg(args, "prefix"), "prefix");
  ConvergentSeq x;
  if (const auto lim = optional_arg(args, "limit")) {
    x = ConvergentSeq(prefix, parse_rational_field(*lim, "limit"));
    if (!member(spec, x)) throw ConfigError("not in hyperplane");
  } else {
    x = lift(spec, prefix);
  }
  const Rational value = norm_n(spec, x);
  report.outputs["value"] = rational_json(value);
  report.outputs["member"] = x.str();
  report.lines.push_back(value.str());
  report.lines.push_back("x = " + x.str() + "  (~" + std::to_string(value.approx()) +
                         ", display-only)");
  return report;
}

Report cmd_dual_eval(const Args& args) {
  Report report;
  const auto spec = renormed_spec_from(args);
  const auto f = parse_functional(args, "f");
  const Rational value = dual_norm_n(spec, f);
  report.outputs["value"] = rational_json(value);
  report.lines.push_back(value.str());
  return report;
}

Report cmd_dual_oracle_check(const Args& args) {
  Report report;
  const auto spec = renormed_spec_from(args);
  const int count = parse_int_field(args, "count", 50);
  const int support = parse_int_field(args, "support", 6);
  const int big_n = parse_int_field(args, "N", std::max(support, spec.n + 1));
  SplitMix64 g(parse_seed(args));
  Certificate cert{"dual_norm_oracle_agreement", true, ""};
  for (int i = 0; i < count && cert.ok; ++i) {
    const SummableSeq f = random_functional(g, support, support);
    const Rational closed = dual_norm_n(spec, f);
    const Rational oracle = dual_norm_oracle(spec, f, big_n);
    if (closed != oracle) {
      cert.ok = false;
      cert.witness = "f = " + f.str() + ": closed form " + closed.str() + " vs oracle " +
                     oracle.str();
    }
  }
  report.outputs["cases"] = count;
  report.outputs["n"] = spec.n;
  report.outputs["r_n"] = rational_json(spec.r_n);
  report.outputs["N"] = big_n;
  report.certificates.push_back(cert);
  report.lines.push_back("checked " + std::to_string(count) + " random functionals at N = " +
                         std::to_string(big_n));
  return report;
}

Report cmd_witness(const Args& args) {
  Report report;
  const auto spec = renormed_spec_from(args);
  const auto f = parse_functional(args, "f");
  const int big_n = parse_int_field(args, "N", std::max(f.max_support(), spec.n + 1));
  const ConvergentSeq x = witness(spec, f, big_n);
  const Rational dn = dual_norm_n(spec, f);
  const Rational attained = direct_pair(f, x);
  const Rational wnorm = f.is_zero() ? Rational(0) : norm_n(spec, x);
  report.outputs["witness"] = x.str();
  report.outputs["dual_norm"] = rational_json(dn);
  report.outputs["pairing"] = rational_json(attained);
  report.outputs["witness_norm"] = rational_json(wnorm);
  Certificate cert{"witness_attains_dual_norm", attained == dn && wnorm <= Rational(1), ""};
  if (!cert.ok)
    cert.witness = "f = " + f.str() + ", witness " + x.str() + ", pairing " + attained.str() +
                   ", |f|_n " + dn.str() + ", norm " + wnorm.str();
  report.certificates.push_back(cert);
  report.lines.push_back("witness  = " + x.str());
  report.lines.push_back("pairing  = " + attained.str());
  report.lines.push_back("|f|_n    = " + dn.str());
  report.lines.push_back("||x||_n  = " + wnorm.str());
  return report;
}

Report cmd_fpp_isometry(const Args& args) {
  Report report;
  const auto spec = renormed_spec_from(args);
  const int count = parse_int_field(args, "count", 200);
  const int support = parse_int_field(args, "support", 8);
  SplitMix64 g(parse_seed(args));
  Certificate iso{"shift_isometry", true, ""};
  Certificate inv{"shift_preserves_simplex", true, ""};
  for (int i = 0; i < count && iso.ok && inv.ok; ++i) {
    const SimplexPoint p = random_simplex_point(g, support, 5);
    const SimplexPoint q = random_simplex_point(g, support, 5);
    if (!shift_T(p).valid() || !shift_T(q).valid()) {
      inv.ok = false;
      inv.witness = "p = " + embed(spec, p).str();
      break;
    }
    const auto [before, after] = isometry_check(spec, p, q);
    if (before != after) {
      iso.ok = false;
      iso.witness = "p = " + embed(spec, p).str() + ", q = " + embed(spec, q).str() +
                    ": before " + before.str() + ", after " + after.str();
    }
  }
  report.outputs["pairs"] = count;
  report.certificates.push_back(iso);
  report.certificates.push_back(inv);
  report.lines.push_back("checked " + std::to_string(count) + " random pairs in C");
  return report;
}

Report cmd_fpp_orbit(const Args& args) {
  Report report;
  const auto spec = renormed_spec_from(args);
  const int steps = parse_int_field(args, "steps", 200);
  const auto displacements = krasnoselskii_orbit(spec, SimplexPoint::at_estar(), steps);
  Certificate cert{"displacements_nonincreasing_positive", true, ""};
  for (std::size_t k = 0; k < displacements.size(); ++k) {
    if (!(displacements[k] > Rational(0)) ||
        (k > 0 && displacements[k] > displacements[k - 1])) {
      cert.ok = false;
      cert.witness = "step " + std::to_string(k) + ": " + displacements[k].str();
      break;
    }
  }
  report.certificates.push_back(cert);
  json list = json::array();
  for (const auto& d : displacements) list.push_back(d.str());
  report.outputs["displacements"] = list;
  fill_displacement_csv(report, displacements);
  report.lines.push_back("first displacement = " + displacements.front().str());
  report.lines.push_back("last displacement  = " + displacements.back().str() + " after " +
                         std::to_string(steps) + " steps");
  return report;
}

Report cmd_fpp_classic_c(const Args& args) {
  Report report;
  const int steps = parse_int_field(args, "steps", 200);
  const int pairs = parse_int_field(args, "count", 100);
  const auto rep = classic_c_example(steps, pairs, parse_seed(args));
  report.certificates.push_back({"l1_isometry", rep.isometry_ok, ""});
  report.certificates.push_back({"fixed_point_free", rep.fixed_point_free_ok, ""});
  report.certificates.push_back({"weak_star_pairing", rep.pairing_ok, ""});
  json list = json::array();
  for (const auto& d : rep.displacements) list.push_back(d.str());
  report.outputs["displacements"] = list;
  report.outputs["pairs_checked"] = rep.pairs_checked;
  fill_displacement_csv(report, rep.displacements);
  report.lines.push_back("classical c example: " + std::to_string(rep.pairs_checked) +
                         " pairs checked, first displacement " + rep.displacements.front().str());
  return report;
}

Report cmd_stability_constants(const Args& args) {
  Report report;
  const auto alpha = parse_functional(args, "alpha");
  Rational rs;
  try {
    rs = r_star(alpha);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const Rational gs = gamma_star(rs);
  const Rational bound = bm_upper_formula(alpha);
  report.outputs["r_star"] = rational_json(rs);
  report.outputs["gamma_star"] = rational_json(gs);
  report.outputs["bm_upper_formula"] = rational_json(bound);
  report.lines.push_back("r_star    = " + rs.str());
  report.lines.push_back("gamma_star = " + gs.str() + "  (~" + std::to_string(gs.approx()) +
                         ", display-only)");
  report.lines.push_back("bm_upper <= " + bound.str());
  return report;
}

Report cmd_stability_counterexample(const Args& args) {
  Report report;
  const auto beta = parse_functional(args, "beta");
  const Rational eps = parse_rational_field(require_arg(args, "epsilon"), "epsilon");
  CounterexampleBundle bundle;
  try {
    bundle = counterexample_pipeline(beta, eps);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  report.outputs["n"] = bundle.n;
  report.outputs["r_n"] = rational_json(bundle.r_n);
  report.outputs["e_star"] = bundle.renorm.alpha.str();
  report.outputs["set_C"] = bundle.set_C;
  report.outputs["map_T"] = bundle.map_T;
  report.outputs["distance_bound"] = rational_json(bundle.distance_bound);
  report.certificates.push_back({"shift_isometry", bundle.isometry_certified, ""});
  report.certificates.push_back({"fixed_point_free", bundle.fixed_point_free_certified, ""});
  report.lines.push_back("n = " + std::to_string(bundle.n) + ", r_n = " + bundle.r_n.str());
  report.lines.push_back("distance bound = " + bundle.distance_bound.str() + "  (~" +
                         std::to_string(bundle.distance_bound.approx()) + ", display-only)");
  return report;
}

Report cmd_bm_estimate(const Args& args) {
  Report report;
  const auto alpha = parse_functional(args, "alpha", false);
  const int big_n = parse_int_field(args, "N", std::max(4, alpha.max_support()));
  BmResult res;
  try {
    res = bm_upper_c0(alpha, big_n, default_family(alpha));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  report.outputs["best"] = rational_json(res.best);
  report.outputs["params"] = res.params.str();
  report.outputs["formula_bound"] = rational_json(bm_upper_formula(alpha));
  json entries = json::array();
  for (const auto& entry : res.report) {
    json e;
    e["params"] = entry.params.str();
    if (entry.singular) {
      e["skipped"] = "singular";
    } else {
      e["norm_fwd"] = entry.norm_fwd->str();
      e["norm_inv"] = entry.norm_inv->str();
      e["product"] = entry.product->str();
    }
    entries.push_back(e);
  }
  report.outputs["candidates"] = entries;
  report.lines.push_back("best certified product = " + res.best.str() + " via " +
                         res.params.str());
  report.lines.push_back("closed-form bound 1 + 2|alpha|_1 = " + bm_upper_formula(alpha).str());
  return report;
}

Report cmd_lemma31_check(const Args& args) {
  Report report;
  const int count = parse_int_field(args, "count", 25);
  const int max_dom = parse_int_field(args, "max-dom", 5);
  const int max_cod = parse_int_field(args, "max-cod", 4);
  SplitMix64 g(parse_seed(args));
  Certificate cert{"inscribed_radius_times_quotient_inverse_norm_is_one", true, ""};
  int done = 0;
  while (done < count && cert.ok) {
    const int dom_dim = g.range(2, max_dom);
    const int cod_dim = g.range(1, std::min(max_cod, dom_dim - 1));
    Mat m(cod_dim, Vec(dom_dim, 0));
    for (auto& row : m)
      for (auto& c : row) c = random_rational(g, 3, 2);
    if (rank(m) != cod_dim) continue;
    const TruncatedSpace dom =
        (done % 2) ? TruncatedSpace::sup_space(dom_dim) : TruncatedSpace::l1_space(dom_dim);
    const TruncatedSpace cod =
        (done % 3) ? TruncatedSpace::sup_space(cod_dim) : TruncatedSpace::l1_space(cod_dim);
    const Rational radius = inscribed_radius({m}, dom, cod);
    const Rational qinv = quotient_inverse_norm({m}, dom, cod);
    if (radius * qinv != Rational(1)) {
      cert.ok = false;
      std::ostringstream w;
      w << "dom dim " << dom_dim << ", cod dim " << cod_dim << ": radius " << radius.str()
        << ", quotient inverse norm " << qinv.str();
      cert.witness = w.str();
    }
    ++done;
  }
  report.outputs["cases"] = done;
  report.certificates.push_back(cert);
  report.lines.push_back("checked " + std::to_string(done) + " random surjective maps");
  return report;
}

Report cmd_kernel_bound(const Args& args) {
  Report report;
  const auto xstar = parse_functional(args, "xstar");
  const auto xstar_n = parse_functional(args, "xstar-n");
  const auto z_prefix = parse_rational_list(optional_arg(args, "z-prefix").value_or(""), "z-prefix");
  const Rational z_limit = parse_rational_field(require_arg(args, "z-limit"), "z-limit");
  const ConvergentSeq z(z_prefix, z_limit);
  Rational bound;
  try {
    bound = kernel_distance_bound(xstar, xstar_n, z);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  report.outputs["bound"] = rational_json(bound);
  report.certificates.push_back({"bound_at_least_one", bound >= Rational(1),
                                 bound >= Rational(1) ? "" : bound.str()});
  report.lines.push_back(bound.str());
  return report;
}

Report cmd_facts(const Args&) {
  Report report;
  json list = json::array();
  for (const auto& f : facts_table()) {
    json e;
    e["key"] = f.key;
    e["statement"] = f.statement;
    if (f.value) e["value"] = f.value->str();
    e["source"] = f.source;
    list.push_back(e);
    std::string line = f.key;
    line.resize(26, ' ');
    line += f.value ? f.value->str() : "-";
    line += "  " + f.statement;
    report.lines.push_back(line);
  }
  report.outputs["facts"] = list;
  return report;
}

Report run_command(const std::string& command, const Args& args) {
  Report report;
  if (command == "norm eval") report = cmd_norm_eval(args);
  else if (command == "dual eval") report = cmd_dual_eval(args);
  else if (command == "dual oracle-check") report = cmd_dual_oracle_check(args);
  else if (command == "witness") report = cmd_witness(args);
  else if (command == "fpp isometry") report = cmd_fpp_isometry(args);
  else if (command == "fpp orbit") report = cmd_fpp_orbit(args);
  else if (command == "fpp classic-c") report = cmd_fpp_classic_c(args);
  else if (command == "stability constants") report = cmd_stability_constants(args);
  else if (command == "stability counterexample") report = cmd_stability_counterexample(args);
  else if (command == "bm estimate") report = cmd_bm_estimate(args);
  else if (command == "lemma31 check") report = cmd_lemma31_check(args);
  else if (command == "kernel bound") report = cmd_kernel_bound(args);
  else if (command == "facts") report = cmd_facts(args);
  else throw ConfigError("unknown command: '" + command + "'");
  report.command = command;
  for (const auto& [k, v] : args) {
    if (k != "out" && !v.empty()) report.inputs[k] = v;
  }
  return report;
}

json report_to_json(const Report& report) {
  json j;
  j["command"] = report.command;
  j["inputs"] = json::object();
  for (const auto& [k, v] : report.inputs) j["inputs"][k] = v;
  j["outputs"] = report.outputs;
  j["certificates"] = json::array();
  for (const auto& c : report.certificates) {
    json e;
    e["name"] = c.name;
    e["status"] = c.ok ? "pass" : "fail";
    if (!c.ok) e["witness"] = c.witness;
    j["certificates"].push_back(e);
  }
  // Constant so reports stay byte-identical across runs; wall-clock timing is
  // printed to stdout only.
  j["timings"] = json::object();
  return j;
}

int finish(const Report& report, double elapsed_ms) {
  for (const auto& line : report.lines) std::cout << line << "\n";
  bool all_ok = true;
  for (const auto& c : report.certificates) {
    std::cout << "certificate " << c.name << ": " << (c.ok ? "pass" : "FAIL") << "\n";
    if (!c.ok) {
      std::cout << "  failing witness: " << c.witness << "\n";
      all_ok = false;
    }
  }
  std::cout << "elapsed: " << elapsed_ms << " ms (display-only)\n";
  return all_ok ? 0 : 1;
}

void write_outputs(const Report& report, const std::string& out_path) {
  if (out_path.empty()) return;
  if (out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".csv") {
    if (!report.csv) throw ConfigError("no CSV table for this command");
    std::ofstream os(out_path);
    if (!os) throw ConfigError("cannot write to '" + out_path + "'");
    os << displacement_csv_header() << "\n";
    for (const auto& row : *report.csv) os << row[0] << "," << row[1] << "," << row[2] << "\n";
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw ConfigError("cannot write to '" + out_path + "'");
  os << report_to_json(report).dump(2) << "\n";
}

struct Pending {
  std::string command;
  Args args;
  bool selected = false;
};

void add_leaf(CLI::App* parent, Pending& pending, const std::string& name,
              const std::string& full, const std::vector<std::string>& keys,
              const std::string& desc) {
  auto* sub = parent->add_subcommand(name, desc);
  for (const auto& key : keys) {
    sub->add_option_function<std::string>(
        "--" + key, [&pending, key](const std::string& v) { pending.args[key] = v; }, "");
  }
  sub->add_option_function<std::string>(
      "--out", [&pending](const std::string& v) { pending.args["out"] = v; },
      "write the JSON report (or CSV when the path ends in .csv)");
  sub->callback([&pending, full]() {
    pending.command = full;
    pending.selected = true;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for hyperplane preduals of l1"};
  app.require_subcommand(0, 1);
  Pending pending;
  std::string config_path;
  app.add_option("--config", config_path, "JSON file {\"command\": ..., \"args\": {...}}");

  auto* norm = app.add_subcommand("norm", "renormed norm on W_alpha");
  add_leaf(norm, pending, "eval", "norm eval", {"alpha", "n", "r", "prefix", "limit"},
           "evaluate ||x||_n");
  auto* dual = app.add_subcommand("dual", "dual norm on l1");
  add_leaf(dual, pending, "eval", "dual eval", {"alpha", "n", "r", "f"}, "evaluate |f|_n");
  add_leaf(dual, pending, "oracle-check", "dual oracle-check",
           {"alpha", "n", "r", "count", "support", "N", "seed"},
           "closed form against the vertex oracle");
  add_leaf(&app, pending, "witness", "witness", {"alpha", "n", "r", "f", "N"},
           "norming witness for f");
  auto* fpp = app.add_subcommand("fpp", "fixed point diagnostics");
  add_leaf(fpp, pending, "isometry", "fpp isometry", {"alpha", "n", "r", "count", "support", "seed"},
           "exact isometry of the shift on C");
  add_leaf(fpp, pending, "orbit", "fpp orbit", {"alpha", "n", "r", "steps"},
           "Krasnoselskii displacement table");
  add_leaf(fpp, pending, "classic-c", "fpp classic-c", {"steps", "count", "seed"},
           "the classical example for the predual c");
  auto* stab = app.add_subcommand("stability", "stability constants");
  add_leaf(stab, pending, "constants", "stability constants", {"alpha"},
           "r*, gamma*, and the distance bound");
  add_leaf(stab, pending, "counterexample", "stability counterexample", {"beta", "epsilon"},
           "renorming pipeline with certified C and T");
  auto* bm = app.add_subcommand("bm", "Banach-Mazur estimates");
  add_leaf(bm, pending, "estimate", "bm estimate", {"alpha", "N"},
           "certified upper bound for d(W_alpha, c0)");
  auto* lemma = app.add_subcommand("lemma31", "inscribed-ball identity");
  add_leaf(lemma, pending, "check", "lemma31 check", {"count", "max-dom", "max-cod", "seed"},
           "inscribed radius times quotient inverse norm equals 1");
  auto* kernel = app.add_subcommand("kernel", "kernel distance bound");
  add_leaf(kernel, pending, "bound", "kernel bound", {"xstar", "xstar-n", "z-prefix", "z-limit"},
           "constructive bound for d(ker x*, ker x*_n)");
  add_leaf(&app, pending, "facts", "facts", {}, "recorded constants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!config_path.empty()) {
      if (pending.selected) {
        std::cerr << "error: --config excludes a subcommand\n";
        return 2;
      }
      std::ifstream is(config_path);
      if (!is) {
        std::cerr << "error: cannot read config '" << config_path << "'\n";
        return 2;
      }
      json cfg;
      try {
        cfg = json::parse(is);
      } catch (const json::exception& e) {
        std::cerr << "error: malformed config: " << e.what() << "\n";
        return 2;
      }
      if (!cfg.contains("command") || !cfg["command"].is_string()) {
        std::cerr << "error: config missing \"command\"\n";
        return 2;
      }
      pending.command = cfg["command"].get<std::string>();
      if (cfg.contains("args")) {
        for (const auto& [k, v] : cfg["args"].items()) {
          if (!v.is_string()) {
            std::cerr << "error: config field '" << k << "' must be a string\n";
            return 2;
          }
          pending.args[k] = v.get<std::string>();
        }
      }
      pending.selected = true;
    }
    if (!pending.selected) {
      std::cerr << app.help() << "\n";
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    const Report report = run_command(pending.command, pending.args);
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    write_outputs(report, optional_arg(pending.args, "out").value_or(""));
    return finish(report, elapsed_ms);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
