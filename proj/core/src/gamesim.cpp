#include "wiretap/gamesim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "search.hpp"

namespace wiretap {

std::size_t pow_size(int base, int exponent) {
  std::size_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(base))
      throw std::overflow_error("sequence space overflows size_t");
    out *= static_cast<std::size_t>(base);
  }
  return out;
}

int seq_digit(std::size_t seq, int position, int base) {
  for (int i = 0; i < position; ++i) seq /= static_cast<std::size_t>(base);
  return static_cast<int>(seq % static_cast<std::size_t>(base));
}

namespace {

void validate_code(const SystemSpec& spec, const BlockCode& code) {
  if (code.n <= 0) throw std::invalid_argument("blocklength must be positive");
  if (code.source_size != spec.source.size())
    throw std::invalid_argument("code source alphabet mismatch");
  if (code.input_size != spec.ch_y.input_size())
    throw std::invalid_argument("code channel-input alphabet mismatch");
  if (code.y_size != spec.ch_y.output_size())
    throw std::invalid_argument("code Y alphabet mismatch");
  const std::size_t ns = pow_size(code.source_size, code.n);
  const std::size_t nx = pow_size(code.input_size, code.n);
  const std::size_t ny = pow_size(code.y_size, code.n);
  if (code.encoder.size() != ns * nx)
    throw std::invalid_argument("encoder table has the wrong size");
  if (code.decoder.size() != ny)
    throw std::invalid_argument("decoder table has the wrong size");
  if (code.split) {
    if (code.split->mp_of_seq.size() != ns || code.split->ms_of_seq.size() != ns)
      throw std::invalid_argument("message split tables have the wrong size");
  }
}

std::vector<double> iid_sequence_probs(const FiniteDistribution& p, int n) {
  const std::size_t count = pow_size(p.size(), n);
  ensure_cells(count);
  std::vector<double> out(count);
  for (std::size_t seq = 0; seq < count; ++seq) {
    double mass = 1.0;
    std::size_t rest = seq;
    for (int i = 0; i < n; ++i) {
      mass *= p[static_cast<int>(rest % static_cast<std::size_t>(p.size()))];
      rest /= static_cast<std::size_t>(p.size());
    }
    out[seq] = mass;
  }
  return out;
}

// Product-channel table [x-seq][out-seq] = prod_i ch(x_i, out_i).
std::vector<double> product_channel(const Channel& ch, int n) {
  const std::size_t nx = pow_size(ch.input_size(), n);
  const std::size_t no = pow_size(ch.output_size(), n);
  ensure_cells(nx * no);
  std::vector<double> out(nx * no);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t o = 0; o < no; ++o) {
      double mass = 1.0;
      std::size_t xr = x, orr = o;
      for (int i = 0; i < n && mass > 0.0; ++i) {
        mass *= ch(static_cast<int>(xr % static_cast<std::size_t>(ch.input_size())),
                   static_cast<int>(orr % static_cast<std::size_t>(ch.output_size())));
        xr /= static_cast<std::size_t>(ch.input_size());
        orr /= static_cast<std::size_t>(ch.output_size());
      }
      out[x * no + o] = mass;
    }
  return out;
}

// Joint table [s-seq][z-seq] of P(s^n, z^n).
std::vector<double> joint_source_eve(const SystemSpec& spec,
                                     const BlockCode& code) {
  const std::size_t ns = pow_size(code.source_size, code.n);
  const std::size_t nx = pow_size(code.input_size, code.n);
  const std::size_t nz = pow_size(spec.ch_z.output_size(), code.n);
  ensure_cells(ns * nz);
  std::vector<double> source_prob = iid_sequence_probs(spec.source, code.n);
  std::vector<double> chz = product_channel(spec.ch_z, code.n);
  std::vector<double> out(ns * nz, 0.0);
  for (std::size_t s = 0; s < ns; ++s) {
    if (source_prob[s] == 0.0) continue;
    for (std::size_t x = 0; x < nx; ++x) {
      double w = code.encoder[s * nx + x];
      if (w == 0.0) continue;
      w *= source_prob[s];
      for (std::size_t z = 0; z < nz; ++z) out[s * nz + z] += w * chz[x * nz + z];
    }
  }
  return out;
}

}  // namespace

double exact_error_prob(const SystemSpec& spec, const BlockCode& code) {
  validate_code(spec, code);
  const std::size_t ns = pow_size(code.source_size, code.n);
  const std::size_t nx = pow_size(code.input_size, code.n);
  const std::size_t ny = pow_size(code.y_size, code.n);
  ensure_cells(ns * nx * ny);  // enumeration space, not just the tables
  std::vector<double> source_prob = iid_sequence_probs(spec.source, code.n);
  std::vector<double> chy = product_channel(spec.ch_y, code.n);
  double error = 0.0;
  for (std::size_t s = 0; s < ns; ++s) {
    if (source_prob[s] == 0.0) continue;
    for (std::size_t x = 0; x < nx; ++x) {
      double w = code.encoder[s * nx + x];
      if (w == 0.0) continue;
      w *= source_prob[s];
      double miss = 0.0;
      for (std::size_t y = 0; y < ny; ++y)
        if (code.decoder[y] != static_cast<int>(s)) miss += chy[x * ny + y];
      error += w * miss;
    }
  }
  return std::min(std::max(error, 0.0), 1.0);
}

namespace {

double payoff_core(const SystemSpec& spec, const BlockCode& code,
                   EveObservation obs, EveStrategy* strategy_out) {
  validate_code(spec, code);
  const bool uses_channel = obs == EveObservation::kPastAndChannel ||
                            obs == EveObservation::kPastChannelAndPublicMessage;
  const bool uses_public = obs == EveObservation::kPastAndPublicMessage ||
                           obs == EveObservation::kPastChannelAndPublicMessage;
  if (uses_public && !code.split)
    throw std::invalid_argument("observation requires a message split");

  const int b = code.source_size;
  const int n = code.n;
  const std::size_t ns = pow_size(b, n);
  const std::size_t nz = uses_channel ? pow_size(spec.ch_z.output_size(), n) : 1;
  const std::size_t mp = uses_public ? static_cast<std::size_t>(code.split->mp_count) : 1;

  std::vector<double> mass;
  if (uses_channel)
    mass = joint_source_eve(spec, code);
  else
    mass = iid_sequence_probs(spec.source, n);

  const ValueMatrix& pi = spec.value;
  if (strategy_out) {
    strategy_out->n = n;
    strategy_out->action.assign(static_cast<std::size_t>(n), {});
  }

  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const std::size_t prefixes = pow_size(b, i);
    const std::size_t contexts = prefixes * nz * mp;
    ensure_cells(contexts * static_cast<std::size_t>(b));
    std::vector<double> table(contexts * static_cast<std::size_t>(b), 0.0);
    const std::size_t suffix = pow_size(b, i + 1);
    for (std::size_t s = 0; s < ns; ++s) {
      const std::size_t prefix = s % prefixes;
      const std::size_t si = (s % suffix) / prefixes;
      const std::size_t m =
          uses_public ? static_cast<std::size_t>(code.split->mp_of_seq[s]) : 0;
      if (uses_channel) {
        const double* row = &mass[s * nz];
        for (std::size_t z = 0; z < nz; ++z) {
          if (row[z] == 0.0) continue;
          std::size_t ctx = (prefix * nz + z) * mp + m;
          table[ctx * static_cast<std::size_t>(b) + si] += row[z];
        }
      } else {
        if (mass[s] == 0.0) continue;
        std::size_t ctx = prefix * mp + m;
        table[ctx * static_cast<std::size_t>(b) + si] += mass[s];
      }
    }
    if (strategy_out)
      strategy_out->action[static_cast<std::size_t>(i)]
          .assign(contexts, 0);
    for (std::size_t ctx = 0; ctx < contexts; ++ctx) {
      const double* w = &table[ctx * static_cast<std::size_t>(b)];
      double ctx_mass = 0.0;
      for (int s = 0; s < b; ++s) ctx_mass += w[s];
      if (ctx_mass == 0.0) continue;
      double best = std::numeric_limits<double>::infinity();
      int best_t = 0;
      for (int t = 0; t < pi.action_size(); ++t) {
        double e = 0.0;
        for (int s = 0; s < b; ++s) e += w[s] * pi(s, t);
        if (e < best) {
          best = e;
          best_t = t;
        }
      }
      total += best;
      if (strategy_out)
        strategy_out->action[static_cast<std::size_t>(i)][ctx] = best_t;
    }
  }
  return total / n;
}

}  // namespace

double eve_payoff_with(const SystemSpec& spec, const BlockCode& code,
                       EveObservation observation) {
  return payoff_core(spec, code, observation, nullptr);
}

GameResult optimal_eve_payoff(const SystemSpec& spec, const BlockCode& code) {
  GameResult result;
  result.worst_case_payoff =
      payoff_core(spec, code, EveObservation::kPastAndChannel, &result.strategy);
  result.error_prob = exact_error_prob(spec, code);
  if (code.split) {
    result.weak_secrecy = weak_secrecy(spec, code);
    result.condunif_exponent = condunif_exponent(code, spec.source);
  }
  result.code_kind = code.kind;
  result.seed = code.seed;
  return result;
}

double weak_secrecy(const SystemSpec& spec, const BlockCode& code) {
  validate_code(spec, code);
  if (!code.split)
    throw std::invalid_argument("weak_secrecy requires a message split");
  const std::size_t ns = pow_size(code.source_size, code.n);
  const std::size_t nz = pow_size(spec.ch_z.output_size(), code.n);
  const int mp = code.split->mp_count;
  const int ms = code.split->ms_count;
  ensure_cells(static_cast<std::size_t>(mp) * ms * nz);
  std::vector<double> sz = joint_source_eve(spec, code);
  std::vector<double> probs(static_cast<std::size_t>(mp) * ms * nz, 0.0);
  for (std::size_t s = 0; s < ns; ++s) {
    std::size_t row = (static_cast<std::size_t>(code.split->mp_of_seq[s]) *
                           static_cast<std::size_t>(ms) +
                       static_cast<std::size_t>(code.split->ms_of_seq[s])) *
                      nz;
    for (std::size_t z = 0; z < nz; ++z) probs[row + z] += sz[s * nz + z];
  }
  JointDistribution joint({mp, ms, static_cast<int>(nz)}, std::move(probs));
  return mutual_information(joint, {1}, {2, 0}) / code.n;
}

double condunif_exponent(const BlockCode& code,
                         const FiniteDistribution& source) {
  if (!code.split)
    throw std::invalid_argument("condunif_exponent requires a message split");
  if (source.size() != code.source_size)
    throw std::invalid_argument("source alphabet mismatch");
  const std::size_t ns = pow_size(code.source_size, code.n);
  const int mp = code.split->mp_count;
  const int ms = code.split->ms_count;
  std::vector<double> source_prob = iid_sequence_probs(source, code.n);
  std::vector<double> pair_prob(static_cast<std::size_t>(mp) * ms, 0.0);
  for (std::size_t s = 0; s < ns; ++s)
    pair_prob[static_cast<std::size_t>(code.split->mp_of_seq[s]) *
                  static_cast<std::size_t>(ms) +
              static_cast<std::size_t>(code.split->ms_of_seq[s])] +=
        source_prob[s];
  double worst_ratio = 1.0;
  for (int p = 0; p < mp; ++p) {
    double pm = 0.0;
    for (int s = 0; s < ms; ++s)
      pm += pair_prob[static_cast<std::size_t>(p) * ms + s];
    if (pm <= kSupportTolerance) continue;
    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (int s = 0; s < ms; ++s) {
      double c = pair_prob[static_cast<std::size_t>(p) * ms + s];
      hi = std::max(hi, c);
      lo = std::min(lo, c);
    }
    if (lo <= kSupportTolerance) {
      if (ms > 1) return std::numeric_limits<double>::infinity();
      continue;
    }
    worst_ratio = std::max(worst_ratio, hi / lo);
  }
  return std::log2(worst_ratio) / code.n;
}

std::pair<double, double> lemma1_gap(const SystemSpec& spec,
                                     const BlockCode& code) {
  double lhs = eve_payoff_with(spec, code, EveObservation::kPastAndChannel);
  double rhs =
      eve_payoff_with(spec, code, EveObservation::kPastAndPublicMessage);
  return {lhs, rhs};
}

std::pair<double, double> lemma3_check(const JointDistribution& chain,
                                       const ValueMatrix& g) {
  if (chain.rank() != 3)
    throw std::invalid_argument("lemma3_check expects a rank-3 joint");
  const int nx = chain.dims()[0];
  const int ny = chain.dims()[1];
  const int nz = chain.dims()[2];
  if (g.source_size() != nz)
    throw std::invalid_argument("g table must be indexed by (z, action)");

  // Verify X - Y - Z: P(x,y,z) P(y) must equal P(x,y) P(y,z).
  JointDistribution pxy = chain.marginal({0, 1});
  JointDistribution pyz = chain.marginal({1, 2});
  JointDistribution py = chain.marginal({1});
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      for (int z = 0; z < nz; ++z) {
        double lhs = chain.at({x, y, z}) * py.flat()[static_cast<std::size_t>(y)];
        double rhs = pxy.at({x, y}) * pyz.at({y, z});
        if (std::abs(lhs - rhs) > 1e-12)
          throw std::invalid_argument("chain is not Markov within 1e-12");
      }

  auto bayes_min = [&](const std::vector<double>& weights) {
    // weights[z]: the conditional slice (unnormalized)
    double best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < g.action_size(); ++a) {
      double e = 0.0;
      for (int z = 0; z < nz; ++z) e += weights[static_cast<std::size_t>(z)] * g(z, a);
      best = std::min(best, e);
    }
    return best;
  };

  double min_xy = 0.0;
  std::vector<double> w(static_cast<std::size_t>(nz));
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      double mass = 0.0;
      for (int z = 0; z < nz; ++z) {
        w[static_cast<std::size_t>(z)] = chain.at({x, y, z});
        mass += w[static_cast<std::size_t>(z)];
      }
      if (mass > 0.0) min_xy += bayes_min(w);
    }

  double min_y = 0.0;
  for (int y = 0; y < ny; ++y) {
    double mass = 0.0;
    for (int z = 0; z < nz; ++z) {
      w[static_cast<std::size_t>(z)] = pyz.at({y, z});
      mass += w[static_cast<std::size_t>(z)];
    }
    if (mass > 0.0) min_y += bayes_min(w);
  }
  return {min_xy, min_y};
}

std::pair<double, double> lemma4_check(const JointDistribution& p,
                                       const JointDistribution& q,
                                       const std::vector<double>& f) {
  if (p.dims() != q.dims())
    throw std::invalid_argument("lemma4_check dimension mismatch");
  if (f.size() != p.cells())
    throw std::invalid_argument("f table must cover every cell");
  double gap = 0.0;
  double f_max = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    gap += (p.flat()[i] - q.flat()[i]) * f[i];
    f_max = std::max(f_max, std::abs(f[i]));
  }
  return {std::abs(gap), 2.0 * f_max * total_variation(p, q)};
}

BlockCode make_identity_code(const SystemSpec& spec, int n) {
  if (spec.source.size() != spec.ch_y.input_size())
    throw std::invalid_argument(
        "identity code needs matching source and channel-input alphabets");
  if (n <= 0) throw std::invalid_argument("blocklength must be positive");
  BlockCode code;
  code.n = n;
  code.source_size = spec.source.size();
  code.input_size = spec.ch_y.input_size();
  code.y_size = spec.ch_y.output_size();
  const std::size_t ns = pow_size(code.source_size, n);
  const std::size_t ny = pow_size(code.y_size, n);
  ensure_cells(ns * ns);
  code.encoder.assign(ns * ns, 0.0);
  for (std::size_t s = 0; s < ns; ++s) code.encoder[s * ns + s] = 1.0;

  // Symbolwise maximum-posterior estimate, ties to the lowest symbol.
  std::vector<int> symbol_map(static_cast<std::size_t>(code.y_size));
  for (int y = 0; y < code.y_size; ++y) {
    double best = -1.0;
    int best_s = 0;
    for (int s = 0; s < code.source_size; ++s) {
      double w = spec.source[s] * spec.ch_y(s, y);
      if (w > best) {
        best = w;
        best_s = s;
      }
    }
    symbol_map[static_cast<std::size_t>(y)] = best_s;
  }
  code.decoder.resize(ny);
  for (std::size_t y = 0; y < ny; ++y) {
    std::size_t shat = 0;
    std::size_t place = 1;
    for (int i = 0; i < n; ++i) {
      int yi = seq_digit(y, i, code.y_size);
      shat += static_cast<std::size_t>(symbol_map[static_cast<std::size_t>(yi)]) * place;
      place *= static_cast<std::size_t>(code.source_size);
    }
    code.decoder[y] = static_cast<int>(shat);
  }
  code.kind = "identity";
  return code;
}

namespace {

// Rebuild the message-pair MAP decoder (ties to the lexicographically
// lowest (mp, ms)) and the per-sequence encoder rows.
void finish_binning_code(const SystemSpec& spec, BlockCode& code) {
  const MessageSplit& split = *code.split;
  const std::size_t ns = pow_size(code.source_size, code.n);
  const std::size_t nx = pow_size(code.input_size, code.n);
  const std::size_t ny = pow_size(code.y_size, code.n);
  const std::size_t pairs =
      static_cast<std::size_t>(split.mp_count) * split.ms_count;
  const std::vector<double>& enc_msg = *code.encoder_by_message;

  code.encoder.assign(ns * nx, 0.0);
  for (std::size_t s = 0; s < ns; ++s) {
    std::size_t row = static_cast<std::size_t>(split.mp_of_seq[s]) *
                          static_cast<std::size_t>(split.ms_count) +
                      static_cast<std::size_t>(split.ms_of_seq[s]);
    std::copy(enc_msg.begin() + static_cast<std::ptrdiff_t>(row * nx),
              enc_msg.begin() + static_cast<std::ptrdiff_t>((row + 1) * nx),
              code.encoder.begin() + static_cast<std::ptrdiff_t>(s * nx));
  }

  std::vector<double> source_prob = iid_sequence_probs(spec.source, code.n);
  std::vector<double> pair_prob(pairs, 0.0);
  for (std::size_t s = 0; s < ns; ++s)
    pair_prob[static_cast<std::size_t>(split.mp_of_seq[s]) *
                  static_cast<std::size_t>(split.ms_count) +
              static_cast<std::size_t>(split.ms_of_seq[s])] += source_prob[s];

  ensure_cells(nx * ny);
  std::vector<double> chy = product_channel(spec.ch_y, code.n);
  code.decoder.resize(ny);
  for (std::size_t y = 0; y < ny; ++y) {
    double best = -1.0;
    std::size_t best_pair = 0;
    for (std::size_t pair = 0; pair < pairs; ++pair) {
      if (pair_prob[pair] == 0.0) continue;
      double like = 0.0;
      for (std::size_t x = 0; x < nx; ++x) {
        double w = enc_msg[pair * nx + x];
        if (w > 0.0) like += w * chy[x * ny + y];
      }
      double score = pair_prob[pair] * like;
      if (score > best) {
        best = score;
        best_pair = pair;
      }
    }
    std::size_t mp = best_pair / static_cast<std::size_t>(split.ms_count);
    std::size_t ms = best_pair % static_cast<std::size_t>(split.ms_count);
    code.decoder[y] = static_cast<int>(
        ms * static_cast<std::size_t>(split.mp_count) + mp);
  }
}

}  // namespace

BlockCode make_binning_code(const SystemSpec& spec, int n, double rate_public,
                            double rate_secure, std::uint64_t seed,
                            const BinningOptions& options) {
  if (n <= 0) throw std::invalid_argument("blocklength must be positive");
  if (!(rate_public >= 0.0) || !(rate_secure >= 0.0))
    throw std::invalid_argument("rates must be nonnegative");
  const int b = spec.source.size();
  const int xc = spec.ch_y.input_size();

  const auto count_for = [&](double rate) {
    double raw = std::exp2(static_cast<double>(n) * rate);
    auto count = static_cast<long long>(std::llround(raw));
    if (count < 1 || std::abs(raw - static_cast<double>(count)) > 1e-6)
      throw std::invalid_argument("rate does not give an integer message count");
    return count;
  };
  const long long mp_count = count_for(rate_public);
  const long long ms_count = count_for(rate_secure);

  // Coordinate split: the first k_p source symbols form the public message.
  auto digits_for = [&](long long count) {
    int k = 0;
    long long acc = 1;
    while (acc < count) {
      acc *= b;
      ++k;
    }
    if (acc != count)
      throw std::invalid_argument(
          "message count is not a power of the source alphabet size");
    return k;
  };
  const int kp = digits_for(mp_count);
  const int ks = digits_for(ms_count);
  if (kp + ks != n)
    throw std::invalid_argument(
        "rates are inconsistent with a lossless coordinate split");

  BlockCode code;
  code.n = n;
  code.source_size = b;
  code.input_size = xc;
  code.y_size = spec.ch_y.output_size();
  code.kind = "binning";
  code.seed = seed;
  code.rate_public = rate_public;
  code.rate_secure = rate_secure;
  code.satellite_redraw = options.satellite_redraw;

  const std::size_t ns = pow_size(b, n);
  MessageSplit split;
  split.mp_count = static_cast<int>(mp_count);
  split.ms_count = static_cast<int>(ms_count);
  split.mp_of_seq.resize(ns);
  split.ms_of_seq.resize(ns);
  const std::size_t kpow = pow_size(b, kp);
  for (std::size_t s = 0; s < ns; ++s) {
    split.mp_of_seq[s] = static_cast<int>(s % kpow);
    split.ms_of_seq[s] = static_cast<int>(s / kpow);
  }
  code.split = split;

  const FiniteDistribution cloud_dist = FiniteDistribution::uniform(xc);
  const Channel satellite = Channel::uniform_mix(xc, options.satellite_redraw);

  int randomization = options.randomization;
  if (randomization <= 0) {
    JointDistribution vwz = JointDistribution::product(cloud_dist, satellite)
                                .attach(spec.ch_z, 1);
    double iwzv = mutual_information(vwz, {1}, {2}, {0});
    randomization = std::max(
        1, static_cast<int>(std::llround(std::exp2(n * iwzv))));
  }
  code.randomization = randomization;

  detail::SplitMix64 rng(seed);
  auto draw_seq = [&](const auto& symbol_prob) {
    std::size_t seq = 0;
    std::size_t place = 1;
    for (int i = 0; i < n; ++i) {
      double u = rng.next_double();
      double acc = 0.0;
      int sym = xc - 1;
      for (int x = 0; x < xc; ++x) {
        acc += symbol_prob(i, x);
        if (u < acc) {
          sym = x;
          break;
        }
      }
      seq += static_cast<std::size_t>(sym) * place;
      place *= static_cast<std::size_t>(xc);
    }
    return seq;
  };

  code.v_words.resize(static_cast<std::size_t>(mp_count));
  for (long long p = 0; p < mp_count; ++p)
    code.v_words[static_cast<std::size_t>(p)] = static_cast<int>(
        draw_seq([&](int, int x) { return cloud_dist[x]; }));

  code.w_words.assign(
      static_cast<std::size_t>(mp_count),
      std::vector<std::vector<int>>(static_cast<std::size_t>(ms_count)));
  const std::size_t nx = pow_size(xc, n);
  ensure_cells(static_cast<std::size_t>(mp_count) *
               static_cast<std::size_t>(ms_count) * nx);
  std::vector<double> enc_msg(static_cast<std::size_t>(mp_count) *
                                  static_cast<std::size_t>(ms_count) * nx,
                              0.0);
  for (long long p = 0; p < mp_count; ++p) {
    const std::size_t v = static_cast<std::size_t>(
        code.v_words[static_cast<std::size_t>(p)]);
    for (long long s = 0; s < ms_count; ++s) {
      auto& sats = code.w_words[static_cast<std::size_t>(p)]
                               [static_cast<std::size_t>(s)];
      sats.resize(static_cast<std::size_t>(randomization));
      const std::size_t row =
          (static_cast<std::size_t>(p) * static_cast<std::size_t>(ms_count) +
           static_cast<std::size_t>(s)) *
          nx;
      for (int j = 0; j < randomization; ++j) {
        std::size_t w = draw_seq([&](int i, int x) {
          return satellite(seq_digit(v, i, xc), x);
        });
        sats[static_cast<std::size_t>(j)] = static_cast<int>(w);
        enc_msg[row + w] += 1.0 / randomization;
      }
    }
  }
  code.encoder_by_message = std::move(enc_msg);
  finish_binning_code(spec, code);
  return code;
}

BlockCode without_randomization(const SystemSpec& spec, const BlockCode& code) {
  if (!code.split || !code.encoder_by_message || code.w_words.empty())
    throw std::invalid_argument("expected a binning code");
  BlockCode stripped = code;
  stripped.randomization = 1;
  const std::size_t nx = pow_size(code.input_size, code.n);
  std::vector<double> enc_msg(
      static_cast<std::size_t>(code.split->mp_count) *
          static_cast<std::size_t>(code.split->ms_count) * nx,
      0.0);
  for (std::size_t p = 0; p < code.w_words.size(); ++p)
    for (std::size_t s = 0; s < code.w_words[p].size(); ++s) {
      stripped.w_words[p][s] = {code.w_words[p][s].front()};
      std::size_t row =
          (p * static_cast<std::size_t>(code.split->ms_count) + s) * nx;
      enc_msg[row + static_cast<std::size_t>(code.w_words[p][s].front())] = 1.0;
    }
  stripped.encoder_by_message = std::move(enc_msg);
  finish_binning_code(spec, stripped);
  return stripped;
}

}  // namespace wiretap
