// newton-atlas: Newton polygons, bifurcation sets and family diagnostics from
// the command line.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "newton_atlas/newton_atlas.hpp"

namespace na = newton_atlas;

namespace {

enum ExitCode { kOk = 0, kUsage = 2, kNonIsolated = 3, kDegenerate = 4, kSolver = 5 };

struct RunConfig {
  std::string command;
  std::string expression;
  std::string file;
  std::string at;
  std::string sigma;
  std::vector<std::string> interval{"0", "1"};
  std::size_t samples = 33;
  double tol = 1e-10;
  double cluster_tol = 1e-8;
  std::uint64_t seed = 0x5eed;
  std::string output;
  std::string format = "json";
  std::string svg;
  bool allow_degenerate = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const RunConfig& cfg) {
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in) throw UsageError("cannot read " + cfg.file);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  if (cfg.expression.empty()) throw UsageError("an expression or --file is required");
  return cfg.expression;
}

na::Rational rational_flag(const std::string& text, const std::string& flag) {
  try {
    return na::parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + " expects a rational number, got '" + text + "'");
  }
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + cfg.output);
  out << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

na::SolveOptions solve_options(const RunConfig& cfg) {
  na::SolveOptions o;
  o.tol = cfg.tol;
  o.cluster_tol = cfg.cluster_tol;
  o.seed = cfg.seed;
  return o;
}

std::string tsv_of_object(const na::Json& j) {
  std::string out = "key\tvalue\n";
  for (const auto& [key, value] : j.items()) out += key + "\t" + value.dump() + "\n";
  return out;
}

int run_polygon(const RunConfig& cfg) {
  na::ParsedPolynomial parsed = na::parse_polynomial(read_input(cfg));
  std::vector<na::LatticePoint> support, disappearing;
  na::Json header;
  if (auto* f = std::get_if<na::BivariatePolynomial>(&parsed)) {
    if (!cfg.at.empty() || !cfg.sigma.empty()) throw UsageError("--at and --sigma need an expression in s");
    if (f->is_zero()) throw UsageError("the zero polynomial has no Newton polygon");
    support = f->support();
    header["polynomial"] = na::to_string(*f);
  } else {
    const auto& family = std::get<na::PolynomialFamily>(parsed);
    if (!cfg.at.empty() && !cfg.sigma.empty()) throw UsageError("--at and --sigma are exclusive");
    header["family"] = na::to_string(family);
    if (!cfg.at.empty()) {
      na::Rational s0 = rational_flag(cfg.at, "--at");
      na::BivariatePolynomial f = na::evaluate_family(family, s0);
      if (f.is_zero()) throw UsageError("the polynomial vanishes at s = " + cfg.at);
      support = f.support();
      header["at"] = na::to_string(s0);
    } else {
      support = family.support();
      if (!cfg.sigma.empty()) {
        na::RealParameter sigma(rational_flag(cfg.sigma, "--sigma"));
        disappearing = na::disappearing_monomials(family, sigma).disappearing;
        header["sigma"] = sigma.to_string();
      }
    }
  }
  na::Json body = header;
  body.update(na::newton_json(support, disappearing));
  std::string svg = na::render_svg(support, disappearing);
  if (!cfg.svg.empty()) write_file(cfg.svg, svg);
  if (cfg.format == "svg") {
    write_output(cfg, svg);
  } else if (cfg.format == "tsv") {
    write_output(cfg, tsv_of_object(body));
  } else {
    write_output(cfg, na::dump(body));
  }
  return kOk;
}

int run_invariants(const RunConfig& cfg) {
  na::ParsedPolynomial parsed = na::parse_polynomial(read_input(cfg));
  na::BivariatePolynomial f;
  na::Json body;
  if (auto* p = std::get_if<na::BivariatePolynomial>(&parsed)) {
    if (!cfg.at.empty()) throw UsageError("--at needs an expression in s");
    f = *p;
  } else {
    if (cfg.at.empty()) throw UsageError("expression depends on s; pass --at");
    na::Rational s0 = rational_flag(cfg.at, "--at");
    f = na::evaluate_family(std::get<na::PolynomialFamily>(parsed), s0);
    body["at"] = na::to_string(s0);
  }
  if (f.is_constant()) throw UsageError("constant polynomial");
  na::SolveOptions options = solve_options(cfg);
  if (!na::has_isolated_singularities(f)) throw na::NonIsolatedError("polynomial has non-isolated singularities");
  if (!cfg.allow_degenerate) {
    auto report = na::is_nondegenerate(f, options.root_options());
    if (!report.nondegenerate)
      throw na::DegenerateError("polynomial is degenerate, lambda and B_inf are unavailable (use --allow-degenerate)");
  }
  body.update(na::invariants_json(f, options));
  if (cfg.format == "svg") {
    write_output(cfg, na::render_svg(f.support()));
  } else if (cfg.format == "tsv") {
    write_output(cfg, tsv_of_object(body));
  } else {
    write_output(cfg, na::dump(body));
  }
  return kOk;
}

std::string sweep_tsv(const na::Json& sweep) {
  std::string out = "s\tcritical\tnu\tmu\tlambda\tbaff\tbinf\tb\terror\n";
  for (const auto& sample : sweep["samples"]) {
    out += sample["s"]["value"].get<std::string>() + "\t" + sample["critical"].dump() + "\t" + sample["nu"].dump() +
           "\t" + sample["mu"].dump() + "\t" + sample["lambda"].dump() + "\t" + sample["baff"].dump() + "\t" +
           sample["binf"].dump() + "\t" + sample["b"].dump() + "\t" +
           (sample["error"].is_null() ? std::string() : sample["error"].get<std::string>()) + "\n";
  }
  return out;
}

int run_family(const RunConfig& cfg) {
  na::ParsedPolynomial parsed = na::parse_polynomial(read_input(cfg));
  auto* family = std::get_if<na::PolynomialFamily>(&parsed);
  if (!family) throw UsageError("family analysis needs an expression in s");
  if (cfg.interval.size() != 2) throw UsageError("--interval takes two values");
  na::Rational lo = rational_flag(cfg.interval[0], "--interval"), hi = rational_flag(cfg.interval[1], "--interval");
  if (!(lo < hi)) throw UsageError("--interval must satisfy lo < hi");
  if (cfg.samples < 3) throw UsageError("--samples must be at least 3");
  na::SweepOptions options;
  options.n_samples = cfg.samples;
  options.solve = solve_options(cfg);
  na::Json body = na::family_json(*family, lo, hi, options);
  if (!cfg.svg.empty()) {
    std::vector<na::LatticePoint> gone;
    if (!body["critical_parameters"].empty()) {
      auto crit = na::critical_parameters(*family, lo, hi);
      gone = na::disappearing_monomials(*family, crit.front()).disappearing;
    }
    write_file(cfg.svg, na::render_svg(family->support(), gone));
  }
  if (cfg.format == "svg") {
    write_output(cfg, na::render_svg(family->support()));
  } else if (cfg.format == "tsv") {
    write_output(cfg, sweep_tsv(body["sweep"]));
  } else {
    write_output(cfg, na::dump(body));
  }
  return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("expression", cfg.expression, "polynomial in x, y (and s for families)");
  sub->add_option("--file", cfg.file, "read the expression from a UTF-8 text file");
  sub->add_option("--tol", cfg.tol, "residual tolerance of the root solver")->check(CLI::PositiveNumber);
  sub->add_option("--cluster-tol", cfg.cluster_tol, "clustering tolerance of value sets")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "seed for the root solver and shear retries");
  sub->add_option("-o,--output", cfg.output, "output path (default stdout)");
  sub->add_option("--format", cfg.format, "json, tsv or svg")->check(CLI::IsMember({"json", "tsv", "svg"}));
  sub->add_option("--svg", cfg.svg, "also write the Newton polygon as SVG to this path");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Newton polygon invariants and bifurcation sets of plane polynomials", "newton-atlas"};
  app.require_subcommand(1);

  CLI::App* polygon = app.add_subcommand("polygon", "Newton polygon data (JSON) and diagram (SVG)");
  add_common(polygon, cfg);
  polygon->add_option("--at", cfg.at, "evaluate the family at this parameter");
  polygon->add_option("--sigma", cfg.sigma, "mark monomials disappearing at this parameter");

  CLI::App* inv = app.add_subcommand("invariants", "nu, mu, lambda and the sets B_aff, B_inf, B");
  add_common(inv, cfg);
  inv->add_option("--at", cfg.at, "evaluate the family at this parameter");
  inv->add_flag("--allow-degenerate", cfg.allow_degenerate, "report what is available for degenerate input");

  CLI::App* fam = app.add_subcommand("family", "critical parameters, degree classification and sweep");
  add_common(fam, cfg);
  fam->add_option("--interval", cfg.interval, "parameter interval lo hi")->expected(2);
  fam->add_option("--samples", cfg.samples, "uniform grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (const char* env = std::getenv("NEWTON_ATLAS_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: NEWTON_ATLAS_SEED must be a non-negative integer\n";
      return kUsage;
    }
  }

  try {
    if (polygon->parsed()) return run_polygon(cfg);
    if (inv->parsed()) return run_invariants(cfg);
    return run_family(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const na::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const na::DegenerateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const na::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNonIsolated;
  } catch (const na::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kSolver;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kSolver;
  }
}
