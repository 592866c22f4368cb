#ifndef WIRETAP_PROB_HPP
#define WIRETAP_PROB_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact finite-alphabet probability machinery: distributions, channels,
// dense joint tables, and the information measures built on them.
// Conventions: all logarithms are base 2 (entropies and rates in bits),
// 0*log(0) = 0, and entries below kSupportTolerance count as exact zeros
// for support purposes.

namespace wiretap {

inline constexpr double kMassTolerance = 1e-12;
inline constexpr double kSupportTolerance = 1e-15;

// Dense-table budget shared by every enumeration in the library.
// Default 2^26 cells; the WIRETAP_SIZE_GUARD environment variable (integer)
// overrides it, and set_size_guard_limit overrides both.
std::size_t size_guard_limit();
void set_size_guard_limit(std::size_t cells);  // 0 restores default/env

class SizeGuardError : public std::runtime_error {
 public:
  SizeGuardError(std::size_t required, std::size_t limit);
  std::size_t required_cells() const { return required_; }
  std::size_t limit_cells() const { return limit_; }

 private:
  std::size_t required_;
  std::size_t limit_;
};

// Throws SizeGuardError if a dense table of `cells` entries exceeds the guard.
void ensure_cells(std::size_t cells);

// Probability mass function over {0, ..., size-1}. Immutable.
class FiniteDistribution {
 public:
  explicit FiniteDistribution(std::vector<double> probs);

  static FiniteDistribution uniform(int size);
  static FiniteDistribution point_mass(int size, int symbol);
  // {1-p, p}: symbol 1 carries probability p.
  static FiniteDistribution bernoulli(double p);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& probs() const { return probs_; }
  double max_prob() const;

 private:
  std::vector<double> probs_;
};

// Row-stochastic conditional distribution: rows_[x*output_size + y] = P(y|x).
class Channel {
 public:
  Channel(int input_size, int output_size, std::vector<double> rows);

  static Channel identity(int size);
  static Channel bsc(double crossover);
  // Keeps the input symbol with probability 1-redraw, otherwise emits a
  // uniform symbol. Reduces to BSC(redraw/2) on binary alphabets.
  static Channel uniform_mix(int size, double redraw);

  int input_size() const { return input_; }
  int output_size() const { return output_; }
  double operator()(int x, int y) const {
    return rows_[static_cast<std::size_t>(x) * output_ + y];
  }
  FiniteDistribution row(int x) const;
  // P(z|x) = sum_y P(y|x) next(y,z)
  Channel then(const Channel& next) const;
  FiniteDistribution push_forward(const FiniteDistribution& input) const;

 private:
  int input_;
  int output_;
  std::vector<double> rows_;
};

// Dense joint law over a product of finite alphabets. The last axis varies
// fastest in the flat layout. Immutable.
class JointDistribution {
 public:
  JointDistribution(std::vector<int> dims, std::vector<double> probs);

  // Two-axis joint P(x)*ch(x,y) with axes {input, output}.
  static JointDistribution product(const FiniteDistribution& input,
                                   const Channel& channel);

  int rank() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<double>& flat() const { return probs_; }
  std::size_t cells() const { return probs_.size(); }
  double at(const std::vector<int>& index) const;

  // Marginal over the listed axes, in the listed order.
  JointDistribution marginal(const std::vector<int>& keep_axes) const;
  FiniteDistribution axis_marginal(int axis) const;
  // Appends one axis distributed as channel(value at source_axis, .).
  JointDistribution attach(const Channel& channel, int source_axis) const;

 private:
  std::vector<int> dims_;
  std::vector<double> probs_;
  std::vector<std::size_t> strides_;
};

double entropy(const FiniteDistribution& p);
double joint_entropy(const JointDistribution& joint);

// H(target | given); equals the marginal entropy when `given` is empty.
double conditional_entropy(const JointDistribution& joint,
                           const std::vector<int>& target_axes,
                           const std::vector<int>& given_axes);
double conditional_entropy(const JointDistribution& joint, int target_axis,
                           const std::vector<int>& given_axes);

// I(A;B|C) via H(A,C) + H(B,C) - H(A,B,C) - H(C). A and B may share axes
// (I(X;X) = H(X)); neither may intersect C.
double mutual_information(const JointDistribution& joint,
                          const std::vector<int>& axes_a,
                          const std::vector<int>& axes_b,
                          const std::vector<int>& axes_cond = {});

double binary_entropy(double q);
// a*b = a(1-b) + b(1-a), the cascade crossover of two BSCs.
double bsc_convolve(double a, double b);

// Half-L1 distance; coincides with sup_A |P(A)-Q(A)| on finite alphabets.
double total_variation(const JointDistribution& p, const JointDistribution& q);
// D(p||q) in bits; +infinity when supp(p) is not contained in supp(q).
double kl_divergence(const JointDistribution& p, const JointDistribution& q);

// Capacity of a discrete memoryless channel in bits (Blahut-Arimoto).
double channel_capacity(const Channel& channel, double tolerance = 1e-12,
                        int max_iterations = 20000);
FiniteDistribution capacity_achieving_input(const Channel& channel,
                                            double tolerance = 1e-12,
                                            int max_iterations = 20000);

}  // namespace wiretap

#endif  // WIRETAP_PROB_HPP
