#ifndef WIRETAP_REGIONS_HPP
#define WIRETAP_REGIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wiretap/payoff.hpp"
#include "wiretap/prob.hpp"

// Achievable-rate and payoff regions of the wiretap source-channel system:
// the channel-coding region and its binary-symmetric closed form, the joint
// inner bounds, the BSC/Hamming analytic payoff, the converse bound, and
// the four-curve comparison used by the CLI.

namespace wiretap {

// Auxiliary cascade V -> W -> X feeding the broadcast channel.
struct ChannelAux {
  FiniteDistribution v_dist;
  Channel w_given_v;
  Channel x_given_w;

  ChannelAux(FiniteDistribution v, Channel w_v, Channel x_w);
};

// Fixed problem data: source, broadcast channel marginals, value function.
struct SystemSpec {
  FiniteDistribution source;
  Channel ch_y;
  Channel ch_z;
  ValueMatrix value;

  SystemSpec(FiniteDistribution s, Channel y, Channel z, ValueMatrix v);
};

struct RatePair {
  double r_p = 0.0;  // public, bits/symbol
  double r_s = 0.0;  // secure, bits/symbol

  RatePair() = default;
  RatePair(double rp, double rs);
};

struct PayoffCurve {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (parameter, payoff)
};

// Mutual informations of the joint law P_V P_{W|V} P_{X|W} P_{Y|X} P_{Z|X}.
struct ChannelAuxInfo {
  double i_v_y = 0.0;
  double i_v_z = 0.0;
  double i_w_y = 0.0;
  double i_w_y_given_v = 0.0;
  double i_w_z_given_v = 0.0;

  double secrecy_gap() const { return i_w_y_given_v - i_w_z_given_v; }
};

ChannelAuxInfo channel_aux_info(const SystemSpec& spec, const ChannelAux& aux);

// True iff r_p < I(V;Y) and r_s < I(W;Y|V) - I(W;Z|V), both strict.
bool channel_region_contains(const SystemSpec& spec, const ChannelAux& aux,
                             const RatePair& rates);

// The V -(BSC gamma)-> W = X cascade on binary alphabets.
ChannelAux bsc_cascade_aux(double gamma);

struct BscRegionPoint {
  double gamma;
  double r_p;
  double r_s;
};

// Boundary corners of the binary-symmetric channel-coding region on a
// uniform gamma grid over [0, 1/2]:
//   R_p = 1 - h(gamma*p1)
//   R_s = h(gamma*p1) - h(gamma*p2) - h(p1) + h(p2)
std::vector<BscRegionPoint> bsc_channel_region(double p1, double p2,
                                               int gamma_grid_size);

// Payoff certified by the joint inner bound for the given auxiliaries;
// empty when the rate inequalities fail.
std::optional<double> inner_bound_payoff(const SystemSpec& spec,
                                         const SourceAux& source_aux,
                                         const ChannelAux& ch_aux);

struct ImprovedBound {
  double payoff;
  double alpha;  // fraction of the block the public message stays hidden
};

// Strengthened bound alpha*Pi_max + (1-alpha)*payoff_given_aux with
// alpha = [I(V;Y)-I(V;Z)]^+ / I(S;U), clamped to [0,1]; alpha = 1 when
// I(S;U) = 0. Same feasibility test as inner_bound_payoff.
std::optional<ImprovedBound> improved_bound_payoff(const SystemSpec& spec,
                                                   const SourceAux& source_aux,
                                                   const ChannelAux& ch_aux);

struct BscHammingDetail {
  bool feasible = false;
  // 0: source fits inside the secure rate; 1: total rate binds at gamma;
  // 2: source entropy at or above 1 - h(p1), nothing certified.
  int regime = 2;
  double gamma = 0.0;
  double secure_rate = 0.0;  // equivocation fed into the Hamming curve
  double payoff = 0.0;
};

BscHammingDetail bsc_hamming_detail(const FiniteDistribution& source,
                                    double p1, double p2);

// Closed-form achievable payoff for a binary source over the degraded BSC
// pair with Hamming value; empty when the source is not losslessly
// transmissible.
std::optional<double> bsc_hamming_payoff(const FiniteDistribution& source,
                                         double p1, double p2);

struct BscImprovedDetail {
  bool feasible = false;
  double payoff = 0.0;
  double alpha = 0.0;
  double gamma = 0.0;
};

// The improved bound maximized over the gamma-indexed cascade family with
// the binding source-aux choice (evaluated on the constraint-set closure).
BscImprovedDetail bsc_improved_detail(const FiniteDistribution& source,
                                      double p1, double p2);

// Non-strict converse test: H(S) <= I(W;Y), H(S|U) <= [gap]^+ and
// payoff <= payoff_given_aux for the given auxiliaries. The entropy
// comparisons carry 1e-9 closure slack so exact boundary cases pass.
bool upper_bound_check(const SystemSpec& spec, const SourceAux& source_aux,
                       const ChannelAux& ch_aux, double payoff);

struct UpperBoundSearch {
  int restarts = 48;
  int iterations = 400;
  std::uint64_t seed = 0;
  SecrecySearch payoff_budget{};
};

struct UpperBoundResult {
  double payoff = 0.0;
  double gap = 0.0;                  // best feasible secrecy gap found
  double equivocation_budget = 0.0;  // min(H(S), [gap]^+)
};

// Approximate upper envelope: maximize the secrecy gap over auxiliaries
// with I(W;Y) >= H(S), then the payoff over side-information channels
// within the resulting equivocation budget. Deterministic under the seed.
// Empty when H(S) exceeds the capacity of the legitimate channel.
std::optional<UpperBoundResult> upper_bound_payoff(
    const SystemSpec& spec, const UpperBoundSearch& budget = {});

// The four comparison curves on a grid of Bernoulli biases: closed-form
// inner bound, improved bound, unconditional payoff, and the exact
// single-letter payoff of the uncoded system. Labels: thm1, thm2, uncond,
// noenc.
std::vector<PayoffCurve> figure4_curves(const std::vector<double>& p_grid,
                                        double p1 = 0.0, double p2 = 0.3);

}  // namespace wiretap

#endif  // WIRETAP_REGIONS_HPP
