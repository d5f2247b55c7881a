#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include "eisenlab/acceptance.hpp"
#include "eisenlab/errors.hpp"
#include "eisenlab/kernels.hpp"
#include "eisenlab/report.hpp"

using namespace eisenlab;

namespace {

struct CliConfig {
  int level = 0;
  int sub_level = 0;
  int shear = 0;
  int weight = 0;
  std::string lam = "0,0@1";
  std::string mu = "0,0@1";
  std::string identity;
  std::string p, q;
  std::optional<int> prec;
  int digits = 0;
  std::string out;
  std::string figure;
  bool timing = false;
};

// Exact sampling of the (p, q) polynomial identity when no sample is given.
const std::pair<int, int> default_samples[] = {{1, 1}, {2, -1}, {3, 5}};

int severity(Status s) {
  switch (s) {
    case Status::Verified: return 0;
    case Status::Inconclusive: return 1;
    case Status::Refuted: return 2;
  }
  return 2;
}

int finish(const std::vector<VerificationReport>& reports, const CliConfig& cfg) {
  Status worst = Status::Verified;
  for (const auto& r : reports) {
    std::cout << report_summary(r);
    if (cfg.timing) std::cout << "  elapsed " << r.elapsed_ms << " ms\n";
    if (severity(r.status) > severity(worst)) worst = r.status;
  }
  if (!cfg.out.empty()) {
    if (reports.size() == 1) {
      emit_report(reports.front(), cfg.out, cfg.timing);
    } else {
      nlohmann::ordered_json all = nlohmann::ordered_json::array();
      for (const auto& r : reports) all.push_back(report_to_json(r, cfg.timing));
      std::ofstream os(cfg.out, std::ios::binary);
      if (!os) throw Error("cannot open " + cfg.out + " for writing");
      os << all.dump(2) << '\n';
    }
  }
  return exit_code(worst);
}

std::vector<LParams> param_samples(const CliConfig& cfg) {
  const TorsionPoint lam = TorsionPoint::parse(cfg.lam), mu = TorsionPoint::parse(cfg.mu);
  if (cfg.p.empty() != cfg.q.empty()) throw Error("--p and --q go together");
  if (!cfg.p.empty()) return {{lam, mu, parse_rational(cfg.p), parse_rational(cfg.q), cfg.weight}};
  std::vector<LParams> out;
  for (auto [p, q] : default_samples) out.push_back({lam, mu, Rational(p), Rational(q), cfg.weight});
  return out;
}

int run_symbolic(const CliConfig& cfg) {
  std::optional<HullChain> chain;
  if (cfg.sub_level) chain = hull_chain(cfg.sub_level, cfg.shear);
  KernelCheck c = check_kernel(cfg.identity, cfg.weight ? cfg.weight : 2, chain);
  std::cout << to_string(c.id) << ": " << (c.holds ? "holds" : "fails") << '\n';
  if (!c.holds) std::cout << "  difference " << c.witness.to_string() << '\n';
  return c.holds ? 0 : 2;
}

int run_hull(const CliConfig& cfg) {
  HullChain chain = hull_chain(cfg.sub_level, cfg.shear);
  std::cout << '[';
  for (std::size_t i = 0; i < chain.vectors.size(); ++i) {
    std::cout << (i ? "," : "") << '(' << chain.vectors[i].x << ',' << chain.vectors[i].y << ')';
  }
  std::cout << "]\n";
  if (!cfg.out.empty()) {
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) throw Error("cannot open " + cfg.out + " for writing");
    os << chain_to_json(chain).dump() << '\n';
  }
  if (!cfg.figure.empty()) emit_hull_svg(chain, cfg.figure);
  return 0;
}

int run_expand(const CliConfig& cfg) {
  const EisIndex idx = TorsionPoint::parse(cfg.lam).index(cfg.weight, cfg.level);
  QuasiForm f = eis_series(idx, cfg.prec.value_or(sturm_bound(cfg.weight, cfg.level)));
  if (cfg.out.empty()) {
    write_series_csv(std::cout, idx, f);
  } else {
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) throw Error("cannot open " + cfg.out + " for writing");
    write_series_csv(os, idx, f);
    std::cout << "weight " << idx.weight << " level " << idx.level << " (" << idx.c1 << "," << idx.c2
              << "): truncation " << f.truncation() << ", Y-depth " << f.depth() << '\n';
  }
  return 0;
}

int run_selftest() {
  int failed = 0;
  for (const auto& r : run_acceptance(&std::cout)) failed += !r.passed();
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Eisenstein series identities"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--prec", cfg.prec, "q-expansion truncation (default: Sturm bound)")->check(CLI::PositiveNumber);
    sub->add_option("--digits", cfg.digits, "floating precision in decimal digits")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "write the report JSON here");
    sub->add_flag("--timing", cfg.timing, "record elapsed_ms");
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--lam", cfg.lam, "torsion point c1,c2@M")->required();
    sub->add_option("--mu", cfg.mu, "torsion point c1,c2@M")->required();
  };
  auto add_weighted = [&](CLI::App* sub) {
    sub->add_option("--weight", cfg.weight, "weight k")->required();
    sub->add_option("--p", cfg.p, "rational p (default: three samples)");
    sub->add_option("--q", cfg.q, "rational q");
  };

  auto* symbolic = app.add_subcommand("symbolic", "check one of the kernel identities K16 K23 K24 K32 K33 K34");
  symbolic->add_option("--identity", cfg.identity)->required();
  symbolic->add_option("--weight", cfg.weight, "k for K23/K34");
  symbolic->add_option("--sub-level", cfg.sub_level, "chain level for K32/K33/K34 (default 5)");
  symbolic->add_option("--shear", cfg.shear);

  auto* hull = app.add_subcommand("hull", "print the lower-hull chain");
  hull->add_option("--sub-level", cfg.sub_level)->required()->check(CLI::PositiveNumber);
  hull->add_option("--shear", cfg.shear)->required();
  hull->add_option("--out", cfg.out, "write the chain JSON here");
  hull->add_option("--figure", cfg.figure, "write the SVG figure here");

  auto* expand = app.add_subcommand("expand", "q-expansion of one normalized Eisenstein series, as CSV");
  expand->add_option("--weight", cfg.weight)->required()->check(CLI::PositiveNumber);
  expand->add_option("--level", cfg.level)->required()->check(CLI::PositiveNumber);
  expand->add_option("--lam", cfg.lam, "torsion point c1,c2@M");
  expand->add_option("--prec", cfg.prec)->check(CLI::PositiveNumber);
  expand->add_option("--out", cfg.out, "CSV path (default: standard output)");

  auto* two = app.add_subcommand("two-term", "E(lam)E(mu) + E(-lam)E(-mu) relation");
  auto* three = app.add_subcommand("three-term", "weight-2 three-term relation");
  for (auto* sub : {two, three}) {
    sub->add_option("--level", cfg.level)->required()->check(CLI::PositiveNumber);
    add_pair(sub);
    add_common(sub);
  }

  auto* prop = app.add_subcommand("prop21", "weighted three-term sum at weight k");
  prop->add_option("--level", cfg.level)->required()->check(CLI::PositiveNumber);
  add_pair(prop);
  add_weighted(prop);
  add_common(prop);

  auto* hecke = app.add_subcommand("hecke", "trace identity over the hull chain");
  hecke->add_option("--sub-level", cfg.sub_level)->required()->check(CLI::PositiveNumber);
  hecke->add_option("--shear", cfg.shear)->required();
  add_pair(hecke);
  add_weighted(hecke);
  add_common(hecke);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  try {
    if (cfg.digits) set_default_digits(cfg.digits);
    if (*symbolic) return run_symbolic(cfg);
    if (*hull) return run_hull(cfg);
    if (*expand) return run_expand(cfg);
    if (*selftest) return run_selftest();

    std::vector<VerificationReport> reports;
    const TorsionPoint lam = TorsionPoint::parse(cfg.lam), mu = TorsionPoint::parse(cfg.mu);
    if (*two) reports.push_back(verify_two_term(lam, mu, cfg.level, cfg.prec));
    if (*three) reports.push_back(verify_three_term_w2(lam, mu, cfg.level, cfg.prec));
    if (*prop) {
      for (const auto& params : param_samples(cfg)) reports.push_back(verify_prop21(params, cfg.level, cfg.prec));
    }
    if (*hecke) {
      for (const auto& params : param_samples(cfg)) {
        reports.push_back(verify_hecke_trace(cfg.sub_level, cfg.shear, params, cfg.prec));
      }
    }
    return finish(reports, cfg);
  } catch (const Error& e) {
    std::cerr << "eisenlab: " << e.what() << '\n';
    return 1;
  }
}
