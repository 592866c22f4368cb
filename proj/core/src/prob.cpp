#include "wiretap/prob.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace wiretap {

namespace {

std::size_t default_guard_limit() {
  if (const char* env = std::getenv("WIRETAP_SIZE_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 26;
}

std::size_t& guard_slot() {
  static std::size_t limit = default_guard_limit();
  return limit;
}

double xlog2x(double x) {
  return x > kSupportTolerance ? x * std::log2(x) : 0.0;
}

void check_axis(const JointDistribution& joint, int axis) {
  if (axis < 0 || axis >= joint.rank())
    throw std::invalid_argument("axis " + std::to_string(axis) +
                                " out of range for rank " +
                                std::to_string(joint.rank()));
}

void check_axis_group(const JointDistribution& joint,
                      const std::vector<int>& axes, const char* name) {
  for (std::size_t i = 0; i < axes.size(); ++i) {
    check_axis(joint, axes[i]);
    for (std::size_t j = i + 1; j < axes.size(); ++j)
      if (axes[i] == axes[j])
        throw std::invalid_argument(std::string("duplicate axis in ") + name);
  }
}

std::vector<int> axis_union(const std::vector<int>& a,
                            const std::vector<int>& b) {
  std::vector<int> out = a;
  for (int axis : b)
    if (std::find(out.begin(), out.end(), axis) == out.end())
      out.push_back(axis);
  return out;
}

}  // namespace

std::size_t size_guard_limit() { return guard_slot(); }

void set_size_guard_limit(std::size_t cells) {
  guard_slot() = cells == 0 ? default_guard_limit() : cells;
}

SizeGuardError::SizeGuardError(std::size_t required, std::size_t limit)
    : std::runtime_error("dense table of " + std::to_string(required) +
                         " cells exceeds the size guard of " +
                         std::to_string(limit) +
                         " (set WIRETAP_SIZE_GUARD to raise it)"),
      required_(required),
      limit_(limit) {}

void ensure_cells(std::size_t cells) {
  if (cells > size_guard_limit()) throw SizeGuardError(cells, size_guard_limit());
}

FiniteDistribution::FiniteDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("empty distribution");
  double mass = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p))
      throw std::invalid_argument("distribution entry must be finite and >= 0");
    mass += p;
  }
  if (std::abs(mass - 1.0) > kMassTolerance)
    throw std::invalid_argument("distribution mass " + std::to_string(mass) +
                                " is not 1 within tolerance");
}

FiniteDistribution FiniteDistribution::uniform(int size) {
  if (size <= 0) throw std::invalid_argument("alphabet size must be positive");
  return FiniteDistribution(std::vector<double>(size, 1.0 / size));
}

FiniteDistribution FiniteDistribution::point_mass(int size, int symbol) {
  if (size <= 0) throw std::invalid_argument("alphabet size must be positive");
  if (symbol < 0 || symbol >= size)
    throw std::invalid_argument("point mass symbol out of range");
  std::vector<double> p(size, 0.0);
  p[static_cast<std::size_t>(symbol)] = 1.0;
  return FiniteDistribution(std::move(p));
}

FiniteDistribution FiniteDistribution::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("bernoulli parameter outside [0,1]");
  return FiniteDistribution({1.0 - p, p});
}

double FiniteDistribution::max_prob() const {
  return *std::max_element(probs_.begin(), probs_.end());
}

Channel::Channel(int input_size, int output_size, std::vector<double> rows)
    : input_(input_size), output_(output_size), rows_(std::move(rows)) {
  if (input_ <= 0 || output_ <= 0)
    throw std::invalid_argument("channel alphabet sizes must be positive");
  if (rows_.size() != static_cast<std::size_t>(input_) * output_)
    throw std::invalid_argument("channel row table has the wrong size");
  for (int x = 0; x < input_; ++x) {
    double mass = 0.0;
    for (int y = 0; y < output_; ++y) {
      double p = rows_[static_cast<std::size_t>(x) * output_ + y];
      if (!(p >= 0.0) || !std::isfinite(p))
        throw std::invalid_argument("channel entry must be finite and >= 0");
      mass += p;
    }
    if (std::abs(mass - 1.0) > kMassTolerance)
      throw std::invalid_argument("channel row " + std::to_string(x) +
                                  " mass is not 1 within tolerance");
  }
}

Channel Channel::identity(int size) {
  std::vector<double> rows(static_cast<std::size_t>(size) * size, 0.0);
  for (int x = 0; x < size; ++x) rows[static_cast<std::size_t>(x) * size + x] = 1.0;
  return Channel(size, size, std::move(rows));
}

Channel Channel::bsc(double crossover) {
  if (!(crossover >= 0.0 && crossover <= 1.0))
    throw std::invalid_argument("BSC crossover outside [0,1]");
  return Channel(2, 2,
                 {1.0 - crossover, crossover, crossover, 1.0 - crossover});
}

Channel Channel::uniform_mix(int size, double redraw) {
  if (!(redraw >= 0.0 && redraw <= 1.0))
    throw std::invalid_argument("redraw probability outside [0,1]");
  std::vector<double> rows(static_cast<std::size_t>(size) * size,
                           redraw / size);
  for (int x = 0; x < size; ++x)
    rows[static_cast<std::size_t>(x) * size + x] += 1.0 - redraw;
  return Channel(size, size, std::move(rows));
}

FiniteDistribution Channel::row(int x) const {
  if (x < 0 || x >= input_) throw std::invalid_argument("channel input out of range");
  return FiniteDistribution(std::vector<double>(
      rows_.begin() + static_cast<std::ptrdiff_t>(x) * output_,
      rows_.begin() + static_cast<std::ptrdiff_t>(x + 1) * output_));
}

Channel Channel::then(const Channel& next) const {
  if (next.input_ != output_)
    throw std::invalid_argument("channel composition sizes mismatch");
  std::vector<double> rows(static_cast<std::size_t>(input_) * next.output_, 0.0);
  for (int x = 0; x < input_; ++x)
    for (int y = 0; y < output_; ++y) {
      double p = (*this)(x, y);
      if (p == 0.0) continue;
      for (int z = 0; z < next.output_; ++z)
        rows[static_cast<std::size_t>(x) * next.output_ + z] += p * next(y, z);
    }
  return Channel(input_, next.output_, std::move(rows));
}

FiniteDistribution Channel::push_forward(const FiniteDistribution& input) const {
  if (input.size() != input_)
    throw std::invalid_argument("push_forward input size mismatch");
  std::vector<double> out(static_cast<std::size_t>(output_), 0.0);
  for (int x = 0; x < input_; ++x)
    for (int y = 0; y < output_; ++y) out[y] += input[x] * (*this)(x, y);
  // Renormalize away accumulated rounding so downstream invariants hold.
  double mass = std::accumulate(out.begin(), out.end(), 0.0);
  for (double& p : out) p /= mass;
  return FiniteDistribution(std::move(out));
}

JointDistribution::JointDistribution(std::vector<int> dims,
                                     std::vector<double> probs)
    : dims_(std::move(dims)), probs_(std::move(probs)) {
  if (dims_.empty()) throw std::invalid_argument("joint distribution needs >= 1 axis");
  std::size_t cells = 1;
  for (int d : dims_) {
    if (d <= 0) throw std::invalid_argument("axis size must be positive");
    cells *= static_cast<std::size_t>(d);
  }
  ensure_cells(cells);
  if (probs_.size() != cells)
    throw std::invalid_argument("joint table has the wrong size");
  double mass = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p))
      throw std::invalid_argument("joint entry must be finite and >= 0");
    mass += p;
  }
  if (std::abs(mass - 1.0) > kMassTolerance)
    throw std::invalid_argument("joint mass " + std::to_string(mass) +
                                " is not 1 within tolerance");
  strides_.assign(dims_.size(), 1);
  for (int axis = static_cast<int>(dims_.size()) - 2; axis >= 0; --axis)
    strides_[axis] = strides_[axis + 1] * static_cast<std::size_t>(dims_[axis + 1]);
}

JointDistribution JointDistribution::product(const FiniteDistribution& input,
                                             const Channel& channel) {
  if (input.size() != channel.input_size())
    throw std::invalid_argument("product size mismatch");
  std::vector<double> probs(static_cast<std::size_t>(input.size()) *
                            channel.output_size());
  std::size_t k = 0;
  for (int x = 0; x < input.size(); ++x)
    for (int y = 0; y < channel.output_size(); ++y)
      probs[k++] = input[x] * channel(x, y);
  return JointDistribution({input.size(), channel.output_size()}, std::move(probs));
}

double JointDistribution::at(const std::vector<int>& index) const {
  if (index.size() != dims_.size())
    throw std::invalid_argument("index rank mismatch");
  std::size_t flat = 0;
  for (std::size_t a = 0; a < index.size(); ++a) {
    if (index[a] < 0 || index[a] >= dims_[a])
      throw std::invalid_argument("index out of range");
    flat += strides_[a] * static_cast<std::size_t>(index[a]);
  }
  return probs_[flat];
}

JointDistribution JointDistribution::marginal(
    const std::vector<int>& keep_axes) const {
  check_axis_group(*this, keep_axes, "marginal axes");
  if (keep_axes.empty())
    throw std::invalid_argument("marginal needs at least one axis");
  std::vector<int> out_dims;
  out_dims.reserve(keep_axes.size());
  for (int axis : keep_axes) out_dims.push_back(dims_[axis]);
  std::size_t out_cells = 1;
  for (int d : out_dims) out_cells *= static_cast<std::size_t>(d);
  ensure_cells(out_cells);
  std::vector<double> out(out_cells, 0.0);

  std::vector<int> index(dims_.size(), 0);
  for (std::size_t flat = 0; flat < probs_.size(); ++flat) {
    std::size_t out_flat = 0;
    for (int axis : keep_axes)
      out_flat = out_flat * static_cast<std::size_t>(dims_[axis]) +
                 static_cast<std::size_t>(index[axis]);
    out[out_flat] += probs_[flat];
    for (int a = static_cast<int>(dims_.size()) - 1; a >= 0; --a) {
      if (++index[a] < dims_[a]) break;
      index[a] = 0;
    }
  }
  return JointDistribution(std::move(out_dims), std::move(out));
}

FiniteDistribution JointDistribution::axis_marginal(int axis) const {
  check_axis(*this, axis);
  JointDistribution m = marginal({axis});
  std::vector<double> p = m.flat();
  // Clamp tiny negative rounding and renormalize.
  double mass = 0.0;
  for (double& v : p) {
    v = std::max(v, 0.0);
    mass += v;
  }
  for (double& v : p) v /= mass;
  return FiniteDistribution(std::move(p));
}

JointDistribution JointDistribution::attach(const Channel& channel,
                                            int source_axis) const {
  check_axis(*this, source_axis);
  if (channel.input_size() != dims_[source_axis])
    throw std::invalid_argument("attach channel input size mismatch");
  std::vector<int> out_dims = dims_;
  out_dims.push_back(channel.output_size());
  std::size_t out_cells = probs_.size() * static_cast<std::size_t>(channel.output_size());
  ensure_cells(out_cells);
  std::vector<double> out(out_cells, 0.0);

  std::vector<int> index(dims_.size(), 0);
  for (std::size_t flat = 0; flat < probs_.size(); ++flat) {
    double base = probs_[flat];
    if (base > 0.0) {
      int x = index[source_axis];
      std::size_t off = flat * static_cast<std::size_t>(channel.output_size());
      for (int y = 0; y < channel.output_size(); ++y)
        out[off + y] = base * channel(x, y);
    }
    for (int a = static_cast<int>(dims_.size()) - 1; a >= 0; --a) {
      if (++index[a] < dims_[a]) break;
      index[a] = 0;
    }
  }
  return JointDistribution(std::move(out_dims), std::move(out));
}

double entropy(const FiniteDistribution& p) {
  double h = 0.0;
  for (int i = 0; i < p.size(); ++i) h -= xlog2x(p[i]);
  return std::max(h, 0.0);
}

double joint_entropy(const JointDistribution& joint) {
  double h = 0.0;
  for (double p : joint.flat()) h -= xlog2x(p);
  return std::max(h, 0.0);
}

double conditional_entropy(const JointDistribution& joint,
                           const std::vector<int>& target_axes,
                           const std::vector<int>& given_axes) {
  check_axis_group(joint, target_axes, "target axes");
  check_axis_group(joint, given_axes, "given axes");
  if (target_axes.empty())
    throw std::invalid_argument("conditional entropy needs a target axis");
  std::vector<int> both = axis_union(target_axes, given_axes);
  double h_both = joint_entropy(joint.marginal(both));
  if (given_axes.empty()) return h_both;
  double h_given = joint_entropy(joint.marginal(given_axes));
  return std::max(h_both - h_given, 0.0);
}

double conditional_entropy(const JointDistribution& joint, int target_axis,
                           const std::vector<int>& given_axes) {
  return conditional_entropy(joint, std::vector<int>{target_axis}, given_axes);
}

double mutual_information(const JointDistribution& joint,
                          const std::vector<int>& axes_a,
                          const std::vector<int>& axes_b,
                          const std::vector<int>& axes_cond) {
  check_axis_group(joint, axes_a, "axes_a");
  check_axis_group(joint, axes_b, "axes_b");
  check_axis_group(joint, axes_cond, "axes_cond");
  if (axes_a.empty() || axes_b.empty())
    throw std::invalid_argument("mutual information needs nonempty axis groups");
  for (int axis : axes_cond) {
    const bool in_a = std::find(axes_a.begin(), axes_a.end(), axis) != axes_a.end();
    const bool in_b = std::find(axes_b.begin(), axes_b.end(), axis) != axes_b.end();
    if (in_a || in_b)
      throw std::invalid_argument("conditioning axes overlap an argument group");
  }
  std::vector<int> ac = axis_union(axes_a, axes_cond);
  std::vector<int> bc = axis_union(axes_b, axes_cond);
  std::vector<int> abc = axis_union(ac, axes_b);
  double h_ac = joint_entropy(joint.marginal(ac));
  double h_bc = joint_entropy(joint.marginal(bc));
  double h_abc = joint_entropy(joint.marginal(abc));
  double h_c = axes_cond.empty() ? 0.0 : joint_entropy(joint.marginal(axes_cond));
  return std::max(h_ac + h_bc - h_abc - h_c, 0.0);
}

double binary_entropy(double q) {
  if (!(q >= 0.0 && q <= 1.0))
    throw std::invalid_argument("binary_entropy argument outside [0,1]");
  return -xlog2x(q) - xlog2x(1.0 - q);
}

double bsc_convolve(double a, double b) {
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0))
    throw std::invalid_argument("bsc_convolve arguments outside [0,1]");
  return a * (1.0 - b) + b * (1.0 - a);
}

double total_variation(const JointDistribution& p, const JointDistribution& q) {
  if (p.dims() != q.dims())
    throw std::invalid_argument("total_variation dimension mismatch");
  double l1 = 0.0;
  for (std::size_t i = 0; i < p.flat().size(); ++i)
    l1 += std::abs(p.flat()[i] - q.flat()[i]);
  return 0.5 * l1;
}

double kl_divergence(const JointDistribution& p, const JointDistribution& q) {
  if (p.dims() != q.dims())
    throw std::invalid_argument("kl_divergence dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < p.flat().size(); ++i) {
    double pi = p.flat()[i];
    double qi = q.flat()[i];
    if (pi <= kSupportTolerance) continue;
    if (qi <= kSupportTolerance) return std::numeric_limits<double>::infinity();
    d += pi * std::log2(pi / qi);
  }
  return std::max(d, 0.0);
}

namespace {

// One Blahut-Arimoto ascent pass; returns (lower bound, upper bound) on C.
std::pair<double, double> ba_step(const Channel& ch, std::vector<double>& input) {
  const int nx = ch.input_size();
  const int ny = ch.output_size();
  std::vector<double> out(static_cast<std::size_t>(ny), 0.0);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) out[y] += input[x] * ch(x, y);
  std::vector<double> exponent(static_cast<std::size_t>(nx), 0.0);
  double lower = 0.0, upper = -std::numeric_limits<double>::infinity();
  for (int x = 0; x < nx; ++x) {
    double d = 0.0;  // D(P(.|x) || output) in bits
    for (int y = 0; y < ny; ++y) {
      double p = ch(x, y);
      if (p <= kSupportTolerance) continue;
      d += p * std::log2(p / out[y]);
    }
    exponent[x] = d;
    lower += input[x] * d;
    upper = std::max(upper, d);
  }
  double norm = 0.0;
  for (int x = 0; x < nx; ++x) {
    input[x] *= std::exp2(exponent[x]);
    norm += input[x];
  }
  for (int x = 0; x < nx; ++x) input[x] /= norm;
  return {lower, upper};
}

}  // namespace

FiniteDistribution capacity_achieving_input(const Channel& channel,
                                            double tolerance,
                                            int max_iterations) {
  std::vector<double> input(static_cast<std::size_t>(channel.input_size()),
                            1.0 / channel.input_size());
  for (int it = 0; it < max_iterations; ++it) {
    std::vector<double> prev = input;
    auto [lower, upper] = ba_step(channel, input);
    if (upper - lower < tolerance) {
      return FiniteDistribution(std::move(prev));
    }
  }
  return FiniteDistribution(std::move(input));
}

double channel_capacity(const Channel& channel, double tolerance,
                        int max_iterations) {
  std::vector<double> input(static_cast<std::size_t>(channel.input_size()),
                            1.0 / channel.input_size());
  double lower = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    auto [lo, up] = ba_step(channel, input);
    lower = lo;
    if (up - lo < tolerance) break;
  }
  return std::max(lower, 0.0);
}

}  // namespace wiretap
