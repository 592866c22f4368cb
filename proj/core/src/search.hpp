#ifndef WIRETAP_SRC_SEARCH_HPP
#define WIRETAP_SRC_SEARCH_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

// Internal helpers: a reproducible RNG wrapper and a gradient-free local
// maximizer over products of probability simplices. Not installed.

namespace wiretap::detail {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0,1) with 53 random bits; stable across platforms.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }
  // Uniform in {0, ..., n-1}.
  int next_index(int n) {
    return static_cast<int>(next_double() * n) % n;
  }

 private:
  std::uint64_t state_;
};

using SimplexRows = std::vector<std::vector<double>>;

inline SimplexRows random_rows(SplitMix64& rng, int rows, int cols) {
  SimplexRows out(static_cast<std::size_t>(rows),
                  std::vector<double>(static_cast<std::size_t>(cols)));
  for (auto& row : out) {
    double mass = 0.0;
    for (double& v : row) {
      v = -std::log(1.0 - rng.next_double());
      mass += v;
    }
    for (double& v : row) v /= mass;
  }
  return out;
}

// Hill climb maximizing `objective` (which may return -inf to reject a
// point outright). Moves shift mass between two coordinates of one row,
// with a step that decays as proposals fail.
inline double local_search(
    const std::function<double(const SimplexRows&)>& objective,
    SimplexRows& rows, int iterations, SplitMix64& rng, double step0 = 0.25) {
  double best = objective(rows);
  double step = step0;
  for (int it = 0; it < iterations; ++it) {
    int r = rng.next_index(static_cast<int>(rows.size()));
    auto& row = rows[static_cast<std::size_t>(r)];
    const int cols = static_cast<int>(row.size());
    if (cols < 2) continue;
    int i = rng.next_index(cols);
    int j = rng.next_index(cols);
    if (i == j) j = (j + 1) % cols;
    double delta = std::min(step * rng.next_double(), row[static_cast<std::size_t>(j)]);
    if (delta <= 0.0) {
      step = std::max(step * 0.97, 1e-6);
      continue;
    }
    row[static_cast<std::size_t>(i)] += delta;
    row[static_cast<std::size_t>(j)] -= delta;
    double value = objective(rows);
    if (value > best) {
      best = value;
    } else {
      row[static_cast<std::size_t>(i)] -= delta;
      row[static_cast<std::size_t>(j)] += delta;
      step = std::max(step * 0.97, 1e-6);
    }
  }
  return best;
}

}  // namespace wiretap::detail

#endif  // WIRETAP_SRC_SEARCH_HPP
