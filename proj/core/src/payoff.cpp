#include "wiretap/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "search.hpp"

namespace wiretap {

ValueMatrix::ValueMatrix(int source_size, int action_size,
                         std::vector<double> values)
    : source_(source_size), action_(action_size), values_(std::move(values)) {
  if (source_ <= 0 || action_ <= 0)
    throw std::invalid_argument("value matrix sizes must be positive");
  if (values_.size() != static_cast<std::size_t>(source_) * action_)
    throw std::invalid_argument("value matrix table has the wrong size");
  for (double v : values_)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("value entries must be finite and >= 0");
}

ValueMatrix ValueMatrix::hamming(int size) {
  std::vector<double> v(static_cast<std::size_t>(size) * size, 1.0);
  for (int s = 0; s < size; ++s) v[static_cast<std::size_t>(s) * size + s] = 0.0;
  return ValueMatrix(size, size, std::move(v));
}

double ValueMatrix::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

SourceAux::SourceAux(FiniteDistribution s, Channel aux)
    : source(std::move(s)), aux_channel(std::move(aux)) {
  if (aux_channel.input_size() != source.size())
    throw std::invalid_argument("aux channel input must match source alphabet");
}

double unconditional_payoff(const FiniteDistribution& source,
                            const ValueMatrix& value) {
  if (value.source_size() != source.size())
    throw std::invalid_argument("value matrix source size mismatch");
  double best = std::numeric_limits<double>::infinity();
  for (int t = 0; t < value.action_size(); ++t) {
    double e = 0.0;
    for (int s = 0; s < source.size(); ++s) e += source[s] * value(s, t);
    best = std::min(best, e);
  }
  return best;
}

double payoff_given_aux(const SourceAux& aux, const ValueMatrix& value) {
  const FiniteDistribution& ps = aux.source;
  if (value.source_size() != ps.size())
    throw std::invalid_argument("value matrix source size mismatch");
  const Channel& ch = aux.aux_channel;
  double total = 0.0;
  for (int u = 0; u < ch.output_size(); ++u) {
    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t < value.action_size(); ++t) {
      double e = 0.0;
      for (int s = 0; s < ps.size(); ++s) e += ps[s] * ch(s, u) * value(s, t);
      if (e < best) best = e;  // strict: ties keep the lowest action
    }
    total += best;
  }
  return total;
}

double hamming_payoff_fn(const FiniteDistribution& source, double rate) {
  if (!(rate >= 0.0)) throw std::invalid_argument("rate must be >= 0");
  const double cap = 1.0 - source.max_prob();
  if (rate > 60.0) return std::min(1.0, cap);  // f is within 2^-60 of 1
  double scaled = std::exp2(rate);
  std::uint64_t n = static_cast<std::uint64_t>(scaled);
  if (n < 1) n = 1;
  if (std::log2(static_cast<double>(n + 1)) <= rate) ++n;
  const double lo = std::log2(static_cast<double>(n));
  const double hi = std::log2(static_cast<double>(n + 1));
  const double rise = 1.0 / (static_cast<double>(n) * static_cast<double>(n + 1));
  const double f = (static_cast<double>(n) - 1.0) / static_cast<double>(n) +
                   (rate - lo) * (rise / (hi - lo));
  return std::min(f, cap);
}

namespace {

using detail::SimplexRows;

// rows[s][u] = P(U=u | S=s)
double equivocation(const FiniteDistribution& source, const SimplexRows& rows) {
  const int ns = source.size();
  const int nu = static_cast<int>(rows[0].size());
  double h_su = 0.0, h_u = 0.0;
  for (int u = 0; u < nu; ++u) {
    double pu = 0.0;
    for (int s = 0; s < ns; ++s) {
      double p = source[s] * rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(u)];
      pu += p;
      if (p > kSupportTolerance) h_su -= p * std::log2(p);
    }
    if (pu > kSupportTolerance) h_u -= pu * std::log2(pu);
  }
  return std::max(h_su - h_u, 0.0);
}

double rows_payoff(const FiniteDistribution& source, const ValueMatrix& value,
                   const SimplexRows& rows) {
  const int ns = source.size();
  const int nu = static_cast<int>(rows[0].size());
  double total = 0.0;
  for (int u = 0; u < nu; ++u) {
    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t < value.action_size(); ++t) {
      double e = 0.0;
      for (int s = 0; s < ns; ++s)
        e += source[s] * rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(u)] *
             value(s, t);
      best = std::min(best, e);
    }
    total += best;
  }
  return total;
}

SimplexRows blend(const SimplexRows& a, const SimplexRows& b, double lambda) {
  SimplexRows out = a;
  for (std::size_t r = 0; r < out.size(); ++r)
    for (std::size_t c = 0; c < out[r].size(); ++c)
      out[r][c] = (1.0 - lambda) * a[r][c] + lambda * b[r][c];
  return out;
}

// U = S deterministically; zero equivocation anchor.
SimplexRows reveal_rows(int ns, int nu) {
  SimplexRows rows(static_cast<std::size_t>(ns),
                   std::vector<double>(static_cast<std::size_t>(nu), 0.0));
  for (int s = 0; s < ns; ++s) rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = 1.0;
  return rows;
}

// Pull an infeasible candidate onto the equivocation budget by blending
// toward the reveal anchor (H = 0 there, so a feasible blend exists).
SimplexRows repair(const FiniteDistribution& source, const SimplexRows& rows,
                   const SimplexRows& anchor, double rate) {
  if (equivocation(source, rows) <= rate + 1e-12) return rows;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    if (equivocation(source, blend(rows, anchor, mid)) <= rate)
      hi = mid;
    else
      lo = mid;
  }
  return blend(rows, anchor, hi);
}

}  // namespace

double secrecy_payoff_fn(const FiniteDistribution& source,
                         const ValueMatrix& value, double rate, int aux_size,
                         const SecrecySearch& budget) {
  if (value.source_size() != source.size())
    throw std::invalid_argument("value matrix source size mismatch");
  if (!(rate >= 0.0)) throw std::invalid_argument("rate must be >= 0");
  const double h_source = entropy(source);
  if (rate > h_source + 1e-9)
    throw std::domain_error("rate exceeds the source entropy: infeasible");
  const int ns = source.size();
  const int nu = aux_size > 0 ? aux_size : ns + 2;
  if (nu < ns + 1)
    throw std::invalid_argument("aux alphabet must have at least |S|+1 symbols");

  const SimplexRows reveal = reveal_rows(ns, nu);
  const int erase = ns;  // dedicated symbol carrying "nothing revealed"

  auto feasible_payoff = [&](const SimplexRows& rows) {
    if (equivocation(source, rows) > rate + 1e-11)
      return -std::numeric_limits<double>::infinity();
    return rows_payoff(source, value, rows);
  };

  std::vector<SimplexRows> candidates;
  candidates.push_back(reveal);

  // Erasure family: reveal S with probability 1-t, emit `erase` otherwise.
  {
    SimplexRows full_erase(static_cast<std::size_t>(ns),
                           std::vector<double>(static_cast<std::size_t>(nu), 0.0));
    for (int s = 0; s < ns; ++s)
      full_erase[static_cast<std::size_t>(s)][static_cast<std::size_t>(erase)] = 1.0;
    candidates.push_back(repair(source, full_erase, reveal, rate));
  }

  // Scramble family: route mass into `erase` so its posterior is uniform.
  // H(S|U) = beta * log2|S| exactly, which hits any budget below the point
  // where some row saturates.
  {
    double beta_max = static_cast<double>(ns);
    for (int s = 0; s < ns; ++s) beta_max = std::min(beta_max, ns * source[s]);
    auto scramble = [&](double beta) {
      SimplexRows rows = reveal;
      for (int s = 0; s < ns; ++s) {
        double w = source[s] > 0.0 ? beta / (ns * source[s]) : 0.0;
        w = std::min(w, 1.0);
        rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(erase)] = w;
        rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = 1.0 - w;
      }
      return rows;
    };
    const double log_ns = std::log2(static_cast<double>(ns));
    double beta = std::min(rate / log_ns, beta_max);
    candidates.push_back(repair(source, scramble(beta), reveal, rate));
    if (beta < beta_max)
      candidates.push_back(repair(source, scramble(beta_max), reveal, rate));
    // Past saturation, trade the scramble against a full erasure.
    SimplexRows saturated = scramble(beta_max);
    SimplexRows full_erase(static_cast<std::size_t>(ns),
                           std::vector<double>(static_cast<std::size_t>(nu), 0.0));
    for (int s = 0; s < ns; ++s)
      full_erase[static_cast<std::size_t>(s)][static_cast<std::size_t>(erase)] = 1.0;
    candidates.push_back(repair(source, full_erase, saturated, rate));
  }

  double best = -std::numeric_limits<double>::infinity();
  for (const auto& cand : candidates)
    best = std::max(best, feasible_payoff(cand));

  for (int restart = 0; restart < budget.restarts; ++restart) {
    detail::SplitMix64 rng(budget.seed * 0x9e3779b97f4a7c15ULL +
                           static_cast<std::uint64_t>(restart) + 1);
    SimplexRows rows;
    if (restart < static_cast<int>(candidates.size()))
      rows = candidates[static_cast<std::size_t>(restart)];
    else
      rows = repair(source, detail::random_rows(rng, ns, nu), reveal, rate);
    double value_here = detail::local_search(feasible_payoff, rows,
                                             budget.iterations, rng);
    best = std::max(best, value_here);
  }
  return std::max(best, 0.0);
}

}  // namespace wiretap
