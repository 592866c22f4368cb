#ifndef WIRETAP_TESTS_TEST_UTIL_HPP
#define WIRETAP_TESTS_TEST_UTIL_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

// Test-side helpers. The generator is independent of the library so that
// property suites do not share code with the paths they exercise.

namespace testutil {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double real() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }
  int index(int n) { return static_cast<int>(real() * n) % n; }

  std::vector<double> simplex(int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    double mass = 0.0;
    for (double& x : v) {
      x = -std::log(1.0 - real());
      mass += x;
    }
    for (double& x : v) x /= mass;
    return v;
  }

  // Row-stochastic matrix as a flat row-major table.
  std::vector<double> stochastic(int rows, int cols) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
      std::vector<double> row = simplex(cols);
      out.insert(out.end(), row.begin(), row.end());
    }
    return out;
  }

 private:
  std::uint64_t state_;
};

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline std::string cli_path() {
  const char* env = std::getenv("WIRETAP_CLI");
  if (!env) throw std::runtime_error("WIRETAP_CLI is not set");
  return env;
}

inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace testutil

#endif  // WIRETAP_TESTS_TEST_UTIL_HPP
