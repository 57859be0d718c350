#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

namespace {

struct Options {
  bool sphere = false, hemisphere = false, wedge = false;
  int n = 2;
  int p = 1;
  std::string k, K;
  int bits = 0;
  double tol = 0;
  std::string format = "csv";
  std::string out;
  int jobs = 0;
  std::vector<std::string> names;
  bool qn = false, qtheta = false, mr = false;
  int order = 3;
};

cli::RunConfig to_config(const Options& o, bool tol_given) {
  cli::RunConfig c;
  if (o.sphere + o.hemisphere + o.wedge > 1) throw cli::UsageError("choose one of --sphere, --hemisphere, --wedge");
  c.kind = o.sphere ? polya::Kind::Sphere : (o.wedge ? polya::Kind::Wedge : polya::Kind::Hemisphere);
  if (o.n < 2) throw cli::UsageError("-n must be >= 2");
  c.n = o.n;
  c.p = o.p;
  if (o.wedge && o.p < 1) throw cli::UsageError("-p must be >= 1");
  if (!o.k.empty()) c.k_range = cli::parse_range(o.k);
  if (!o.K.empty()) c.K_range = cli::parse_range(o.K);
  if (c.k_range && c.K_range) throw cli::UsageError("--k and --K are exclusive");
  c.bits = o.bits > 0 ? o.bits : polya::RealCtx::bits_from_env();
  if (c.bits < polya::RealCtx::kMinBits) throw cli::UsageError("--bits must be >= 53");
  if (tol_given) {
    if (o.tol <= 0) throw cli::UsageError("--tol must be positive");
    c.tol = o.tol;
  }
  c.format = o.format == "json" ? cli::Format::json : cli::Format::csv;
  c.out = o.out;
  const unsigned hw = std::thread::hardware_concurrency();
  c.jobs = o.jobs > 0 ? o.jobs : static_cast<int>(hw > 0 ? hw : 1);
  c.names = o.names;
  const int picks = o.qn + o.qtheta + o.mr;
  if (picks > 1) throw cli::UsageError("choose one of --qn, --qtheta, --mr");
  c.certificate = o.qn ? "qn" : (o.qtheta ? "qtheta" : (o.mr ? "mr" : ""));
  c.order = o.order;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polya-type eigenvalue inequalities on spheres, hemispheres and wedges"};
  app.require_subcommand(1);
  Options opt;
  std::function<cli::Outcome(const cli::RunConfig&)> handler;
  std::vector<CLI::Option*> tol_opts;

  auto common = [&](CLI::App* sub, bool manifold, bool ranges) {
    if (manifold) {
      auto* s = sub->add_flag("--sphere", opt.sphere, "closed sphere S^n");
      auto* h = sub->add_flag("--hemisphere", opt.hemisphere, "Dirichlet hemisphere (default)");
      auto* w = sub->add_flag("--wedge", opt.wedge, "wedge of angle pi/p");
      s->excludes(h)->excludes(w);
      h->excludes(w);
      sub->add_option("-p", opt.p, "wedge parameter");
    }
    sub->add_option("-n", opt.n, "dimension")->check(CLI::Range(2, 64));
    if (ranges) {
      sub->add_option("--k", opt.k, "order range A..B");
      sub->add_option("--K", opt.K, "chain range A..B");
    }
    sub->add_option("--bits", opt.bits, "working precision in bits (env POLYA_PRECISION_BITS)");
    tol_opts.push_back(sub->add_option("--tol", opt.tol, "equality tolerance"));
    sub->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", opt.out, "write the table to a file");
    sub->add_option("--jobs", opt.jobs, "worker threads (default: hardware concurrency)")->check(CLI::PositiveNumber);
  };

  auto bind = [&](CLI::App* sub, cli::Outcome (*fn)(const cli::RunConfig&)) {
    sub->callback([&handler, fn] { handler = fn; });
  };

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues by order or by chain");
  common(spectrum, true, true);
  bind(spectrum, cli::cmd_spectrum);

  auto* check = app.add_subcommand("check-polya", "Polya's inequality per order");
  common(check, true, true);
  bind(check, cli::cmd_check_polya);

  auto* bounds = app.add_subcommand("bounds", "evaluate named bounds over an order range");
  common(bounds, true, true);
  bounds->add_option("--name", opt.names, "bound name (repeatable; default all)");
  bind(bounds, cli::cmd_bounds);

  auto* certify = app.add_subcommand("certify", "polynomial certificates");
  common(certify, false, false);
  certify->add_flag("--qn", opt.qn, "Q_n(K) for the lowest order of each chain");
  certify->add_flag("--qtheta", opt.qtheta, "Q(y) governing the sign of Theta'");
  certify->add_flag("--mr", opt.mr, "Taylor certificate M(y) - R(1/y)");
  certify->add_option("-l,--order", opt.order, "odd truncation order for --mr");
  bind(certify, cli::cmd_certify);

  auto* averages = app.add_subcommand("averages", "chain and running averages of the Weyl remainder");
  common(averages, true, true);
  bind(averages, cli::cmd_averages);

  auto* scan = app.add_subcommand("scan-theta", "Theta over a chain range");
  common(scan, false, true);
  bind(scan, cli::cmd_scan_theta);

  auto* wedge = app.add_subcommand("wedge", "tiling transfer and one-term bound on wedges");
  common(wedge, false, true);
  wedge->add_option("-p", opt.p, "wedge parameter")->required();
  bind(wedge, cli::cmd_wedge);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  bool tol_given = false;
  for (auto* t : tol_opts) tol_given = tol_given || t->count() > 0;

  try {
    cli::RunConfig cfg = to_config(opt, tol_given);
    if (wedge->parsed()) cfg.kind = polya::Kind::Wedge;
    cli::Outcome result = handler(cfg);
    if (cfg.out.empty()) {
      cli::write_table(result.table, cfg.format, cfg.bits, std::cout, std::cerr);
    } else {
      std::ofstream f(cfg.out);
      if (!f) throw cli::UsageError("cannot open " + cfg.out);
      cli::write_table(result.table, cfg.format, cfg.bits, f, std::cerr);
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
