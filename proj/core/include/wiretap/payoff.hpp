#ifndef WIRETAP_PAYOFF_HPP
#define WIRETAP_PAYOFF_HPP

#include <cstdint>
#include <vector>

#include "wiretap/prob.hpp"

// Payoff functionals of the adversarial game: what the best eavesdropper
// loses on average, unconditionally or given a side-information channel,
// plus the closed-form Hamming secrecy-payoff curve and its numerical
// counterpart obtained by optimizing over side-information channels.

namespace wiretap {

// Nonnegative value table values_[s*action_size + t].
class ValueMatrix {
 public:
  ValueMatrix(int source_size, int action_size, std::vector<double> values);

  static ValueMatrix hamming(int size);

  int source_size() const { return source_; }
  int action_size() const { return action_; }
  double operator()(int s, int t) const {
    return values_[static_cast<std::size_t>(s) * action_ + t];
  }
  double max_value() const;

 private:
  int source_;
  int action_;
  std::vector<double> values_;
};

// A source together with the eavesdropper's side-information channel
// U = aux_channel(S).
struct SourceAux {
  FiniteDistribution source;
  Channel aux_channel;  // input alphabet must match source

  SourceAux(FiniteDistribution s, Channel aux);
  int aux_size() const { return aux_channel.output_size(); }
};

// min_t E[pi(S,t)]: Eve guesses from the prior alone.
double unconditional_payoff(const FiniteDistribution& source,
                            const ValueMatrix& value);

// sum_u P(u) min_t E[pi(S,t) | U=u]; inner ties break toward the lowest
// action index. Never exceeds unconditional_payoff.
double payoff_given_aux(const SourceAux& aux, const ValueMatrix& value);

// Closed-form Hamming secrecy-payoff: min(f(rate), 1 - max_s P(s)) where f
// interpolates the points (log2 n, (n-1)/n), n = 1, 2, ...
double hamming_payoff_fn(const FiniteDistribution& source, double rate);

struct SecrecySearch {
  int restarts = 64;
  int iterations = 400;
  std::uint64_t seed = 0;
};

// Best payoff over side-information channels P(U|S) whose equivocation
// H(S|U) fits inside the secure-rate budget `rate`. Returns a certified
// feasible lower bound on the optimum; deterministic for a fixed budget.
// aux_size <= 0 selects the default |S| + 2.
double secrecy_payoff_fn(const FiniteDistribution& source,
                         const ValueMatrix& value, double rate,
                         int aux_size = 0, const SecrecySearch& budget = {});

}  // namespace wiretap

#endif  // WIRETAP_PAYOFF_HPP
