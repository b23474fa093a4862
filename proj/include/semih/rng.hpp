#pragma once

#include "semih/types.hpp"

#include <cstdint>
#include <string_view>

namespace semih {

/// Deterministic splitmix64 stream. Hand-rolled so that identical seeds
/// give bit-identical draws on every platform and build.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Inclusive integer range.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  /// Standard complex normal, E|z|^2 = 1.
  Complex cnormal() {
    const double a = normal(), b = normal();
    return Complex(a, b) / std::sqrt(2.0);
  }

  CMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = cnormal();
    return m;
  }

private:
  std::uint64_t state_;
};

/// FNV-1a over the parts, used to derive independent per-trial streams.
std::uint64_t derive_stream(std::uint64_t base_seed, std::string_view tag,
                            std::uint64_t trial, std::uint64_t redraw = 0);

/// Haar-distributed unitary (QR of a complex Gaussian, phases fixed).
CMatrix haar_unitary(Rng& rng, Eigen::Index n);

} // namespace semih
