#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wiretap/gamesim.hpp"
#include "wiretap/payoff.hpp"
#include "wiretap/prob.hpp"
#include "wiretap/regions.hpp"
#include "wiretap/serialize.hpp"

// wiretap: secrecy-as-distortion tradeoffs of a wiretap source-channel
// system. Subcommands emit CSV (curve, region) or JSON (payoff, simulate)
// on stdout; diagnostics go to stderr. Numbers carry 12 significant digits
// so repeated runs are byte-identical.

namespace {

std::string fmt12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// JSON value with the same 12-digit policy; infinities become "inf".
std::string json_number(double v) {
  if (!std::isfinite(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  return fmt12(v);
}

struct SpecFlags {
  std::string spec_path;
  double p = 0.5;
  double p1 = 0.0;
  double p2 = 0.3;
  bool p_set = false;

  wiretap::LoadedSpec load() const {
    if (!spec_path.empty()) return wiretap::load_spec_file(spec_path);
    wiretap::BscShorthand sh{p, p1, p2};
    return wiretap::LoadedSpec{wiretap::make_bsc_hamming_spec(sh), sh};
  }
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags) {
  auto* spec_opt = cmd->add_option("--spec", flags.spec_path,
                                   "JSON system description file");
  auto* p_opt = cmd->add_option("--p", flags.p, "Bernoulli source bias");
  cmd->add_option("--p1", flags.p1, "crossover of the legitimate channel");
  cmd->add_option("--p2", flags.p2, "crossover of the eavesdropper channel");
  p_opt->excludes(spec_opt);
}

int cmd_curve(double p1, double p2, int grid, const std::string& curves_csv) {
  if (grid < 2) throw std::invalid_argument("--grid must be at least 2");
  std::vector<std::string> wanted;
  {
    std::string token;
    for (char c : curves_csv + ",") {
      if (c == ',') {
        if (!token.empty()) wanted.push_back(token);
        token.clear();
      } else {
        token += c;
      }
    }
  }
  const std::vector<std::string> canonical = {"thm1", "thm2", "uncond", "noenc"};
  std::vector<bool> selected(4, false);
  for (const auto& name : wanted) {
    bool known = false;
    for (std::size_t i = 0; i < canonical.size(); ++i)
      if (name == canonical[i]) {
        selected[i] = true;
        known = true;
      }
    if (!known) throw std::invalid_argument("unknown curve name: " + name);
  }

  std::vector<double> p_grid(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i)
    p_grid[static_cast<std::size_t>(i)] = 0.5 * i / (grid - 1);
  auto curves = wiretap::figure4_curves(p_grid, p1, p2);

  std::string header = "p";
  for (std::size_t c = 0; c < curves.size(); ++c)
    if (selected[c]) header += "," + curves[c].label;
  std::cout << header << "\n";
  for (int i = 0; i < grid; ++i) {
    std::string line = fmt12(p_grid[static_cast<std::size_t>(i)]);
    for (std::size_t c = 0; c < curves.size(); ++c)
      if (selected[c])
        line += "," + fmt12(curves[c].points[static_cast<std::size_t>(i)].second);
    std::cout << line << "\n";
  }
  return 0;
}

int cmd_region(double p1, double p2, int gamma_grid) {
  auto boundary = wiretap::bsc_channel_region(p1, p2, gamma_grid);
  std::cout << "gamma,rp,rs\n";
  for (const auto& pt : boundary)
    std::cout << fmt12(pt.gamma) << "," << fmt12(pt.r_p) << ","
              << fmt12(pt.r_s) << "\n";
  return 0;
}

int cmd_payoff(const SpecFlags& flags, const std::string& bound,
               std::uint64_t seed) {
  wiretap::LoadedSpec loaded = flags.load();
  if (bound == "thm1" || bound == "thm2") {
    if (!loaded.bsc)
      throw std::invalid_argument(
          "--bound " + bound +
          " needs the BSC/Hamming shorthand (--p/--p1/--p2 or a spec file "
          "with a bsc block)");
    auto source = wiretap::FiniteDistribution::bernoulli(loaded.bsc->p);
    if (bound == "thm1") {
      auto detail =
          wiretap::bsc_hamming_detail(source, loaded.bsc->p1, loaded.bsc->p2);
      if (!detail.feasible) {
        // Only the trivial payoff 0 is certified, matching the curve column.
        std::cout << "{\"bound\":\"thm1\",\"feasible\":false,\"payoff\":0,"
                     "\"reason\":\"source entropy reaches 1 - h(p1); lossless "
                     "transmission not certified\"}\n";
        return 0;
      }
      std::cout << "{\"bound\":\"thm1\",\"feasible\":true,\"payoff\":"
                << json_number(detail.payoff)
                << ",\"gamma\":" << json_number(detail.gamma)
                << ",\"aux_summary\":\"cascade gamma carrying secure rate "
                << fmt12(detail.secure_rate) << " bits/symbol\"}\n";
      return 0;
    }
    auto detail =
        wiretap::bsc_improved_detail(source, loaded.bsc->p1, loaded.bsc->p2);
    if (!detail.feasible) {
      std::cout << "{\"bound\":\"thm2\",\"feasible\":false,\"payoff\":0,"
                   "\"reason\":\"source entropy exceeds 1 - h(p1)\"}\n";
      return 0;
    }
    std::cout << "{\"bound\":\"thm2\",\"feasible\":true,\"payoff\":"
              << json_number(detail.payoff)
              << ",\"alpha\":" << json_number(detail.alpha)
              << ",\"gamma\":" << json_number(detail.gamma)
              << ",\"aux_summary\":\"public message hidden for an alpha "
                 "fraction of the block\"}\n";
    return 0;
  }
  if (bound != "upper")
    throw std::invalid_argument("--bound must be thm1, thm2 or upper");
  wiretap::UpperBoundSearch budget;
  budget.seed = seed;
  auto result = wiretap::upper_bound_payoff(loaded.spec, budget);
  if (!result) {
    std::cout << "{\"bound\":\"upper\",\"feasible\":false,\"reason\":"
                 "\"source entropy exceeds the capacity of the legitimate "
                 "channel\"}\n";
    return 0;
  }
  std::cout << "{\"bound\":\"upper\",\"feasible\":true,\"payoff\":"
            << json_number(result->payoff)
            << ",\"aux_summary\":\"best secrecy gap "
            << fmt12(result->gap) << " bits/symbol; equivocation budget "
            << fmt12(result->equivocation_budget) << "\"}\n";
  return 0;
}

int cmd_simulate(const SpecFlags& flags, const std::string& code_kind, int n,
                 double rp, double rs, std::uint64_t seed,
                 double satellite_redraw, int randomization,
                 const std::string& dump_path) {
  wiretap::LoadedSpec loaded = flags.load();
  wiretap::BlockCode code;
  if (code_kind == "identity") {
    code = wiretap::make_identity_code(loaded.spec, n);
  } else if (code_kind == "binning") {
    wiretap::BinningOptions options;
    options.satellite_redraw = satellite_redraw;
    options.randomization = randomization;
    code = wiretap::make_binning_code(loaded.spec, n, rp, rs, seed, options);
  } else {
    throw std::invalid_argument("--code must be identity or binning");
  }

  wiretap::GameResult result = wiretap::optimal_eve_payoff(loaded.spec, code);
  std::string out = "{\"n\":" + std::to_string(n) +
                    ",\"seed\":" + std::to_string(seed) +
                    ",\"error_prob\":" + json_number(result.error_prob) +
                    ",\"worst_case_payoff\":" +
                    json_number(result.worst_case_payoff);
  if (code.split) {
    auto gap = wiretap::lemma1_gap(loaded.spec, code);
    out += ",\"weak_secrecy\":" + json_number(*result.weak_secrecy);
    out += ",\"condunif_exponent\":" + json_number(*result.condunif_exponent);
    out += ",\"lemma1\":{\"lhs\":" + json_number(gap.first) +
           ",\"rhs\":" + json_number(gap.second) + "}";
  }
  out += "}";
  std::cout << out << "\n";

  if (!dump_path.empty()) {
    std::ofstream dump(dump_path);
    if (!dump) throw std::invalid_argument("cannot open " + dump_path);
    dump << wiretap::codebook_to_json(code);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wiretap source-channel secrecy tradeoffs"};
  app.require_subcommand(1);

  // curve
  auto* curve = app.add_subcommand(
      "curve", "payoff comparison curves over Bernoulli sources (CSV)");
  double c_p1 = 0.0, c_p2 = 0.3;
  int c_grid = 101;
  std::string c_curves = "thm1,thm2,uncond,noenc";
  curve->add_option("--p1", c_p1, "legitimate channel crossover");
  curve->add_option("--p2", c_p2, "eavesdropper channel crossover");
  curve->add_option("--grid", c_grid, "number of grid points on [0, 1/2]");
  curve->add_option("--curves", c_curves, "comma list of thm1,thm2,uncond,noenc");

  // region
  auto* region = app.add_subcommand(
      "region", "binary-symmetric channel-coding region boundary (CSV)");
  double r_p1 = 0.0, r_p2 = 0.3;
  int r_grid = 101;
  region->add_option("--p1", r_p1, "legitimate channel crossover");
  region->add_option("--p2", r_p2, "eavesdropper channel crossover");
  region->add_option("--gamma-grid", r_grid, "gamma grid points on [0, 1/2]");

  // payoff
  auto* payoff = app.add_subcommand("payoff", "achievable or converse payoff (JSON)");
  SpecFlags p_flags;
  std::string p_bound = "thm1";
  std::uint64_t p_seed = 0;
  add_spec_flags(payoff, p_flags);
  payoff->add_option("--bound", p_bound, "thm1 | thm2 | upper");
  payoff->add_option("--seed", p_seed, "search seed for --bound upper");

  // simulate
  auto* simulate =
      app.add_subcommand("simulate", "exact finite-blocklength game (JSON)");
  SpecFlags s_flags;
  std::string s_code = "identity";
  int s_n = 1;
  double s_rp = 0.0, s_rs = 0.0, s_noise = 0.25;
  std::uint64_t s_seed = 0;
  int s_rand = 0;
  std::string s_dump;
  add_spec_flags(simulate, s_flags);
  simulate->add_option("--code", s_code, "identity | binning");
  simulate->add_option("--n", s_n, "blocklength");
  simulate->add_option("--rp", s_rp, "public rate (bits/symbol)");
  simulate->add_option("--rs", s_rs, "secure rate (bits/symbol)");
  simulate->add_option("--seed", s_seed, "codebook seed");
  simulate->add_option("--satellite-noise", s_noise,
                       "satellite redraw probability");
  simulate->add_option("--randomization", s_rand,
                       "codewords per message pair (0 = auto)");
  simulate->add_option("--dump-code", s_dump, "write the codebook JSON here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (curve->parsed()) return cmd_curve(c_p1, c_p2, c_grid, c_curves);
    if (region->parsed()) return cmd_region(r_p1, r_p2, r_grid);
    if (payoff->parsed()) return cmd_payoff(p_flags, p_bound, p_seed);
    if (simulate->parsed())
      return cmd_simulate(s_flags, s_code, s_n, s_rp, s_rs, s_seed, s_noise,
                          s_rand, s_dump);
  } catch (const wiretap::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
