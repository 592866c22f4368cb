#ifndef WIRETAP_GAMESIM_HPP
#define WIRETAP_GAMESIM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wiretap/regions.hpp"

// Exact small-blocklength realization of the joint source-channel game:
// concrete stochastic codes, exact block-error probability, the exact
// worst-case causally-informed eavesdropper, secrecy diagnostics, and the
// adversary-reduction lemmas checked by enumeration.
//
// Sequences over an alphabet of size b are packed into integers with time
// step i in digit i (lowest digit first), so a causal prefix is seq % b^i.

namespace wiretap {

std::size_t pow_size(int base, int exponent);
int seq_digit(std::size_t seq, int position, int base);

// Deterministic map from source sequences to a (public, secure) pair.
struct MessageSplit {
  int mp_count = 1;
  int ms_count = 1;
  std::vector<int> mp_of_seq;
  std::vector<int> ms_of_seq;
};

// Stochastic encoder P(X^n | S^n) with a deterministic decoder Y^n -> S^n.
// Binning codes also carry the message maps and the drawn codebook.
struct BlockCode {
  int n = 1;
  int source_size = 2;
  int input_size = 2;
  int y_size = 2;
  std::vector<double> encoder;  // |S|^n x |X|^n, rows sum to 1
  std::vector<int> decoder;     // index by y-sequence, yields s-sequence
  std::optional<MessageSplit> split;
  // One encoder row per (mp, ms) pair, row index mp * ms_count + ms.
  std::optional<std::vector<double>> encoder_by_message;
  std::string kind = "custom";
  std::uint64_t seed = 0;
  double rate_public = 0.0;
  double rate_secure = 0.0;
  double satellite_redraw = 0.0;
  int randomization = 1;
  std::vector<int> v_words;                            // [mp]
  std::vector<std::vector<std::vector<int>>> w_words;  // [mp][ms][j]
};

// Eve's optimal decision table; action[i] is indexed by
// (causal prefix) * |Z|^n + (z sequence). Entries without probability mass
// stay 0.
struct EveStrategy {
  int n = 1;
  std::vector<std::vector<int>> action;
};

struct GameResult {
  double error_prob = 0.0;
  double worst_case_payoff = 0.0;
  std::optional<double> weak_secrecy;
  std::optional<double> condunif_exponent;
  EveStrategy strategy;
  std::string code_kind;
  std::uint64_t seed = 0;
};

enum class EveObservation {
  kPastOnly,                     // S^{i-1}
  kPastAndChannel,               // S^{i-1}, Z^n
  kPastAndPublicMessage,         // S^{i-1}, M_p
  kPastChannelAndPublicMessage,  // S^{i-1}, Z^n, M_p
};

// Exact P[g(Y^n) != S^n] by full enumeration.
double exact_error_prob(const SystemSpec& spec, const BlockCode& code);

// Exact min over Eve strategies of E[(1/n) sum_i pi(S_i, T_i)] when T_i may
// depend on the stated observation set. The minimum decomposes into a Bayes
// choice per (i, history) because the objective is additive, so this is
// exact, not heuristic.
double eve_payoff_with(const SystemSpec& spec, const BlockCode& code,
                       EveObservation observation);

// Full game evaluation against the causally-informed worst-case Eve
// (S^{i-1}, Z^n), including the realizing strategy and, for codes with a
// message split, the secrecy diagnostics.
GameResult optimal_eve_payoff(const SystemSpec& spec, const BlockCode& code);

// (1/n) I(M_s; Z^n, M_p) in bits per symbol.
double weak_secrecy(const SystemSpec& spec, const BlockCode& code);

// delta_n = (1/n) log2 max_{m_p, m_s, m_s'} P[m_s|m_p] / P[m_s'|m_p];
// +infinity when a conditional is 0 while a sibling is positive.
double condunif_exponent(const BlockCode& code,
                         const FiniteDistribution& source);

// {payoff with (S^{i-1}, Z^n), payoff with (S^{i-1}, M_p)}.
std::pair<double, double> lemma1_gap(const SystemSpec& spec,
                                     const BlockCode& code);

// For a Markov chain X-Y-Z (rank-3 joint, verified within 1e-12) and a
// table g with g(z, a) laid out as a ValueMatrix over (|Z|, |A|):
// returns {min over f(x,y), min over f(y)} of E[g(Z, f(.))].
std::pair<double, double> lemma3_check(const JointDistribution& chain,
                                       const ValueMatrix& g);

// {|E_p f - E_q f|, 2 max|f| TV(p,q)} for a bounded table f on the cells.
std::pair<double, double> lemma4_check(const JointDistribution& p,
                                       const JointDistribution& q,
                                       const std::vector<double>& f);

// X^n = S^n with the symbolwise maximum-posterior decoder.
BlockCode make_identity_code(const SystemSpec& spec, int n);

struct BinningOptions {
  // Probability that a satellite symbol is redrawn uniformly instead of
  // copying the cloud center.
  double satellite_redraw = 0.25;
  // Codewords per (mp, ms); 0 picks round(2^{n I(W;Z|V)}).
  int randomization = 0;
};

// Seeded superposition codebook: cloud centers per public message,
// satellites per (public, secure, randomization index), exact
// maximum-posterior decoding over message pairs, and a coordinate message
// split (first k_p symbols public, the rest secure). Message counts must be
// integer powers of |S| multiplying to |S|^n.
BlockCode make_binning_code(const SystemSpec& spec, int n, double rate_public,
                            double rate_secure, std::uint64_t seed,
                            const BinningOptions& options = {});

// The same codebook restricted to its first satellite per message pair,
// with the decoder rebuilt for the restricted encoder.
BlockCode without_randomization(const SystemSpec& spec, const BlockCode& code);

}  // namespace wiretap

#endif  // WIRETAP_GAMESIM_HPP
