#include "wiretap/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "search.hpp"

namespace wiretap {

namespace {

void check_bsc_pair(double p1, double p2) {
  if (!(p1 >= 0.0 && p1 <= 0.5) || !(p2 >= 0.0 && p2 <= 0.5))
    throw std::invalid_argument("BSC crossovers must lie in [0, 1/2]");
  if (p1 > p2)
    throw std::invalid_argument("degradation order violated: need p1 <= p2");
}

// Corrected secure-rate boundary of the BSC channel-coding region; equals
// I(W;Y|V) - I(W;Z|V) on the V -(BSC gamma)-> W = X cascade.
double bsc_secure_rate(double gamma, double p1, double p2) {
  return binary_entropy(bsc_convolve(gamma, p1)) -
         binary_entropy(bsc_convolve(gamma, p2)) - binary_entropy(p1) +
         binary_entropy(p2);
}

// Total-rate boundary R_p + R_s at the cascade parameter gamma.
double bsc_total_rate(double gamma, double p1, double p2) {
  return 1.0 - binary_entropy(bsc_convolve(gamma, p2)) - binary_entropy(p1) +
         binary_entropy(p2);
}

// Solves H(S) = 1 - h(gamma*p2) - h(p1) + h(p2) on [0, 1/2]; the right side
// decreases in gamma, so plain bisection applies.
double solve_binding_gamma(double h_source, double p1, double p2) {
  double lo = 0.0, hi = 0.5;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double residual = bsc_total_rate(mid, p1, p2) - h_source;
    if (std::abs(residual) <= 1e-12) return mid;
    if (residual > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-17) break;
  }
  return 0.5 * (lo + hi);
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

ChannelAux::ChannelAux(FiniteDistribution v, Channel w_v, Channel x_w)
    : v_dist(std::move(v)),
      w_given_v(std::move(w_v)),
      x_given_w(std::move(x_w)) {
  if (w_given_v.input_size() != v_dist.size())
    throw std::invalid_argument("P(W|V) input must match |V|");
  if (x_given_w.input_size() != w_given_v.output_size())
    throw std::invalid_argument("P(X|W) input must match |W|");
}

SystemSpec::SystemSpec(FiniteDistribution s, Channel y, Channel z,
                       ValueMatrix v)
    : source(std::move(s)),
      ch_y(std::move(y)),
      ch_z(std::move(z)),
      value(std::move(v)) {
  if (ch_y.input_size() != ch_z.input_size())
    throw std::invalid_argument("broadcast marginals must share the input alphabet");
  if (value.source_size() != source.size())
    throw std::invalid_argument("value matrix source axis must match the source");
}

RatePair::RatePair(double rp, double rs) : r_p(rp), r_s(rs) {
  if (!(rp >= 0.0) || !(rs >= 0.0))
    throw std::invalid_argument("rates must be nonnegative");
}

ChannelAuxInfo channel_aux_info(const SystemSpec& spec, const ChannelAux& aux) {
  if (aux.x_given_w.output_size() != spec.ch_y.input_size())
    throw std::invalid_argument("P(X|W) output must match the channel input");
  // Axes: 0=V, 1=W, 2=X, 3=Y, 4=Z.
  JointDistribution joint =
      JointDistribution::product(aux.v_dist, aux.w_given_v)
          .attach(aux.x_given_w, 1)
          .attach(spec.ch_y, 2)
          .attach(spec.ch_z, 2);
  ChannelAuxInfo info;
  info.i_v_y = mutual_information(joint, {0}, {3});
  info.i_v_z = mutual_information(joint, {0}, {4});
  info.i_w_y = mutual_information(joint, {1}, {3});
  info.i_w_y_given_v = mutual_information(joint, {1}, {3}, {0});
  info.i_w_z_given_v = mutual_information(joint, {1}, {4}, {0});
  return info;
}

bool channel_region_contains(const SystemSpec& spec, const ChannelAux& aux,
                             const RatePair& rates) {
  ChannelAuxInfo info = channel_aux_info(spec, aux);
  return rates.r_p < info.i_v_y && rates.r_s < info.secrecy_gap();
}

ChannelAux bsc_cascade_aux(double gamma) {
  return ChannelAux(FiniteDistribution::uniform(2), Channel::bsc(gamma),
                    Channel::identity(2));
}

std::vector<BscRegionPoint> bsc_channel_region(double p1, double p2,
                                               int gamma_grid_size) {
  check_bsc_pair(p1, p2);
  if (gamma_grid_size < 2)
    throw std::invalid_argument("gamma grid needs at least 2 points");
  std::vector<BscRegionPoint> out;
  out.reserve(static_cast<std::size_t>(gamma_grid_size));
  for (int k = 0; k < gamma_grid_size; ++k) {
    double gamma = 0.5 * static_cast<double>(k) / (gamma_grid_size - 1);
    double rp = 1.0 - binary_entropy(bsc_convolve(gamma, p1));
    double rs = std::max(0.0, bsc_secure_rate(gamma, p1, p2));
    out.push_back({gamma, std::max(rp, 0.0), rs});
  }
  return out;
}

namespace {

struct SourceAuxInfo {
  double h_s;
  double h_s_given_u;
  double i_s_u;
};

SourceAuxInfo source_aux_info(const SourceAux& aux) {
  JointDistribution joint = JointDistribution::product(aux.source, aux.aux_channel);
  SourceAuxInfo info{};
  info.h_s = entropy(aux.source);
  info.h_s_given_u = conditional_entropy(joint, 0, {1});
  info.i_s_u = std::max(info.h_s - info.h_s_given_u, 0.0);
  return info;
}

}  // namespace

std::optional<double> inner_bound_payoff(const SystemSpec& spec,
                                         const SourceAux& source_aux,
                                         const ChannelAux& ch_aux) {
  if (source_aux.source.size() != spec.source.size())
    throw std::invalid_argument("source aux alphabet mismatch");
  ChannelAuxInfo ch = channel_aux_info(spec, ch_aux);
  SourceAuxInfo src = source_aux_info(source_aux);
  if (!(src.i_s_u < ch.i_v_y) || !(src.h_s_given_u < ch.secrecy_gap()))
    return std::nullopt;
  return payoff_given_aux(source_aux, spec.value);
}

std::optional<ImprovedBound> improved_bound_payoff(const SystemSpec& spec,
                                                   const SourceAux& source_aux,
                                                   const ChannelAux& ch_aux) {
  if (source_aux.source.size() != spec.source.size())
    throw std::invalid_argument("source aux alphabet mismatch");
  ChannelAuxInfo ch = channel_aux_info(spec, ch_aux);
  SourceAuxInfo src = source_aux_info(source_aux);
  if (!(src.i_s_u < ch.i_v_y) || !(src.h_s_given_u < ch.secrecy_gap()))
    return std::nullopt;
  double alpha = src.i_s_u <= kSupportTolerance
                     ? 1.0
                     : clamp01(std::max(0.0, ch.i_v_y - ch.i_v_z) / src.i_s_u);
  double conditioned = payoff_given_aux(source_aux, spec.value);
  double pi_max = unconditional_payoff(spec.source, spec.value);
  return ImprovedBound{alpha * pi_max + (1.0 - alpha) * conditioned, alpha};
}

BscHammingDetail bsc_hamming_detail(const FiniteDistribution& source,
                                    double p1, double p2) {
  check_bsc_pair(p1, p2);
  if (source.size() != 2)
    throw std::invalid_argument("binary source required");
  const double h_s = entropy(source);
  const double secrecy_capacity = binary_entropy(p2) - binary_entropy(p1);
  const double capacity = 1.0 - binary_entropy(p1);

  BscHammingDetail detail;
  if (h_s <= secrecy_capacity) {
    detail.feasible = true;
    detail.regime = 0;
    detail.gamma = 0.5;
    detail.secure_rate = h_s;
    detail.payoff = hamming_payoff_fn(source, h_s);
    return detail;
  }
  if (h_s >= capacity) {
    detail.feasible = false;
    detail.regime = 2;
    return detail;
  }
  detail.feasible = true;
  detail.regime = 1;
  detail.gamma = solve_binding_gamma(h_s, p1, p2);
  detail.secure_rate = std::max(0.0, bsc_secure_rate(detail.gamma, p1, p2));
  detail.payoff = hamming_payoff_fn(source, detail.secure_rate);
  return detail;
}

std::optional<double> bsc_hamming_payoff(const FiniteDistribution& source,
                                         double p1, double p2) {
  BscHammingDetail detail = bsc_hamming_detail(source, p1, p2);
  if (!detail.feasible) return std::nullopt;
  return detail.payoff;
}

BscImprovedDetail bsc_improved_detail(const FiniteDistribution& source,
                                      double p1, double p2) {
  check_bsc_pair(p1, p2);
  if (source.size() != 2)
    throw std::invalid_argument("binary source required");
  const double h_s = entropy(source);
  const double secrecy_capacity = binary_entropy(p2) - binary_entropy(p1);
  const double capacity = 1.0 - binary_entropy(p1);

  BscImprovedDetail detail;
  if (h_s > capacity) return detail;  // not losslessly transmissible

  double gamma_max;
  if (h_s <= secrecy_capacity)
    gamma_max = 0.5;
  else if (h_s >= capacity)
    gamma_max = 0.0;  // only the closure point survives
  else
    gamma_max = solve_binding_gamma(h_s, p1, p2);

  const double pi_max = unconditional_payoff(source, ValueMatrix::hamming(2));

  auto value_at = [&](double gamma, double* alpha_out) {
    double rs = std::max(0.0, bsc_secure_rate(gamma, p1, p2));
    double equivocation = std::min(rs, h_s);
    double i_s_u = std::max(h_s - equivocation, 0.0);
    double public_gap = std::max(0.0, binary_entropy(bsc_convolve(gamma, p2)) -
                                          binary_entropy(bsc_convolve(gamma, p1)));
    double alpha = i_s_u <= kSupportTolerance ? 1.0 : clamp01(public_gap / i_s_u);
    if (alpha_out) *alpha_out = alpha;
    return alpha * pi_max +
           (1.0 - alpha) * hamming_payoff_fn(source, equivocation);
  };

  // Deterministic grid + zoom; the family is continuous in gamma.
  double lo = 0.0, hi = gamma_max;
  double best_gamma = gamma_max;
  double best_value = value_at(gamma_max, nullptr);
  for (int round = 0; round < 3; ++round) {
    const int kGrid = 257;
    int best_k = -1;
    for (int k = 0; k < kGrid; ++k) {
      double gamma = lo + (hi - lo) * static_cast<double>(k) / (kGrid - 1);
      double value = value_at(gamma, nullptr);
      if (value > best_value) {
        best_value = value;
        best_gamma = gamma;
        best_k = k;
      }
    }
    if (best_k < 0) break;
    double width = (hi - lo) / (kGrid - 1);
    lo = std::max(0.0, best_gamma - width);
    hi = std::min(gamma_max, best_gamma + width);
  }

  detail.feasible = true;
  detail.gamma = best_gamma;
  detail.payoff = value_at(best_gamma, &detail.alpha);
  return detail;
}

bool upper_bound_check(const SystemSpec& spec, const SourceAux& source_aux,
                       const ChannelAux& ch_aux, double payoff) {
  if (source_aux.source.size() != spec.source.size())
    throw std::invalid_argument("source aux alphabet mismatch");
  ChannelAuxInfo ch = channel_aux_info(spec, ch_aux);
  SourceAuxInfo src = source_aux_info(source_aux);
  // Non-strict comparisons with closure slack: the entropy terms and the
  // gap come from different summation orders, so exact boundary cases
  // would otherwise flip on rounding noise.
  constexpr double kSlack = 1e-9;
  if (!(src.h_s <= ch.i_w_y + kSlack)) return false;
  if (!(src.h_s_given_u <= std::max(0.0, ch.secrecy_gap()) + kSlack))
    return false;
  return payoff <= payoff_given_aux(source_aux, spec.value) + 1e-12;
}

namespace {

using detail::SimplexRows;

// Variable layout for the gap search: row 0 is P_V, the next vc rows are
// P(W|V=v), the last wc rows are P(X|W=w).
struct GapProblem {
  const SystemSpec* spec;
  int vc, wc, xc;

  ChannelAux to_aux(const SimplexRows& rows) const {
    std::vector<double> v = rows[0];
    std::vector<double> wv, xw;
    wv.reserve(static_cast<std::size_t>(vc) * wc);
    for (int r = 0; r < vc; ++r)
      wv.insert(wv.end(), rows[static_cast<std::size_t>(1 + r)].begin(),
                rows[static_cast<std::size_t>(1 + r)].end());
    xw.reserve(static_cast<std::size_t>(wc) * xc);
    for (int r = 0; r < wc; ++r)
      xw.insert(xw.end(), rows[static_cast<std::size_t>(1 + vc + r)].begin(),
                rows[static_cast<std::size_t>(1 + vc + r)].end());
    return ChannelAux(FiniteDistribution(std::move(v)),
                      Channel(vc, wc, std::move(wv)),
                      Channel(wc, xc, std::move(xw)));
  }

  // Feasible points score their gap; infeasible ones are ranked by how far
  // I(W;Y) falls short, so the search can climb back in.
  double score(const SimplexRows& rows, double h_source) const {
    ChannelAuxInfo info = channel_aux_info(*spec, to_aux(rows));
    if (info.i_w_y + 1e-9 < h_source)
      return -1e3 * (h_source - info.i_w_y) - 1.0;
    return info.secrecy_gap();
  }
};

}  // namespace

std::optional<UpperBoundResult> upper_bound_payoff(
    const SystemSpec& spec, const UpperBoundSearch& budget) {
  const double h_s = entropy(spec.source);
  const double capacity = channel_capacity(spec.ch_y);
  if (h_s > capacity + 1e-9) return std::nullopt;

  const int xc = spec.ch_y.input_size();
  const int vc = xc + 2;
  const int wc = xc + 2;
  GapProblem problem{&spec, vc, wc, xc};
  auto objective = [&](const SimplexRows& rows) {
    return problem.score(rows, h_s);
  };

  std::vector<SimplexRows> seeds;
  auto structured_seed = [&](const FiniteDistribution& input) {
    SimplexRows rows;
    std::vector<double> v(static_cast<std::size_t>(vc), 0.0);
    v[0] = 1.0;
    rows.push_back(v);
    std::vector<double> w(static_cast<std::size_t>(wc), 0.0);
    for (int x = 0; x < xc; ++x) w[static_cast<std::size_t>(x)] = input[x];
    for (int r = 0; r < vc; ++r) rows.push_back(w);
    for (int r = 0; r < wc; ++r) {
      std::vector<double> x(static_cast<std::size_t>(xc), 0.0);
      x[static_cast<std::size_t>(std::min(r, xc - 1))] = 1.0;
      rows.push_back(x);
    }
    return rows;
  };
  seeds.push_back(structured_seed(capacity_achieving_input(spec.ch_y)));
  seeds.push_back(structured_seed(FiniteDistribution::uniform(xc)));
  if (xc == 2) {
    // Binary cascades V -(BSC gamma)-> W = X on a coarse gamma grid.
    for (int k = 0; k <= 16; ++k) {
      double gamma = 0.5 * static_cast<double>(k) / 16.0;
      SimplexRows rows;
      std::vector<double> v(static_cast<std::size_t>(vc), 0.0);
      v[0] = v[1] = 0.5;
      rows.push_back(v);
      for (int r = 0; r < vc; ++r) {
        std::vector<double> w(static_cast<std::size_t>(wc), 0.0);
        int base = r < 2 ? r : 0;
        w[static_cast<std::size_t>(base)] = 1.0 - gamma;
        w[static_cast<std::size_t>(1 - base)] = gamma;
        rows.push_back(w);
      }
      for (int r = 0; r < wc; ++r) {
        std::vector<double> x(static_cast<std::size_t>(xc), 0.0);
        x[static_cast<std::size_t>(std::min(r, xc - 1))] = 1.0;
        rows.push_back(x);
      }
      seeds.push_back(rows);
    }
  }

  double best_gap = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < seeds.size(); ++i)
    best_gap = std::max(best_gap, objective(seeds[i]));

  for (int restart = 0; restart < budget.restarts; ++restart) {
    detail::SplitMix64 rng(budget.seed * 0x9e3779b97f4a7c15ULL +
                           static_cast<std::uint64_t>(restart) + 0x51ed);
    SimplexRows rows;
    if (restart < static_cast<int>(seeds.size())) {
      rows = seeds[static_cast<std::size_t>(restart)];
    } else {
      rows = detail::random_rows(rng, 1 + vc + wc, wc);
      // Resize rows to the layout (P_V has vc entries, X rows xc entries).
      rows[0].resize(static_cast<std::size_t>(vc));
      double mass = 0.0;
      for (double& x : rows[0]) mass += x;
      for (double& x : rows[0]) x /= mass;
      for (int r = 0; r < wc; ++r) {
        auto& row = rows[static_cast<std::size_t>(1 + vc + r)];
        row.resize(static_cast<std::size_t>(xc));
        double m = 0.0;
        for (double& x : row) m += x;
        for (double& x : row) x /= m;
      }
    }
    best_gap = std::max(
        best_gap, detail::local_search(objective, rows, budget.iterations, rng));
  }

  if (best_gap < 0.0) {
    // The capacity gate passed, so the structured seed must be feasible;
    // a negative score here means every point was infeasible.
    return std::nullopt;
  }

  UpperBoundResult result;
  result.gap = best_gap;
  result.equivocation_budget = std::min(h_s, std::max(0.0, best_gap));
  result.payoff = secrecy_payoff_fn(spec.source, spec.value,
                                    result.equivocation_budget, 0,
                                    budget.payoff_budget);
  return result;
}

std::vector<PayoffCurve> figure4_curves(const std::vector<double>& p_grid,
                                        double p1, double p2) {
  check_bsc_pair(p1, p2);
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] >= 0.0 && p_grid[i] <= 0.5))
      throw std::invalid_argument("p grid must lie inside [0, 1/2]");
    if (i > 0 && !(p_grid[i] > p_grid[i - 1]))
      throw std::invalid_argument("p grid must be strictly increasing");
  }
  const ValueMatrix hamming = ValueMatrix::hamming(2);
  const Channel eve = Channel::bsc(p2);

  PayoffCurve thm1{"thm1", {}}, thm2{"thm2", {}}, uncond{"uncond", {}},
      noenc{"noenc", {}};
  for (double p : p_grid) {
    FiniteDistribution source = FiniteDistribution::bernoulli(p);
    BscHammingDetail inner = bsc_hamming_detail(source, p1, p2);
    BscImprovedDetail improved = bsc_improved_detail(source, p1, p2);
    thm1.points.emplace_back(p, inner.feasible ? inner.payoff : 0.0);
    thm2.points.emplace_back(p, improved.feasible ? improved.payoff : 0.0);
    uncond.points.emplace_back(p, unconditional_payoff(source, hamming));
    noenc.points.emplace_back(
        p, payoff_given_aux(SourceAux(source, eve), hamming));
  }
  return {thm1, thm2, uncond, noenc};
}

}  // namespace wiretap
