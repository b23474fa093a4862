#include "semih/rng.hpp"

#include <Eigen/QR>

namespace semih {

std::uint64_t derive_stream(std::uint64_t base_seed, std::string_view tag,
                            std::uint64_t trial, std::uint64_t redraw) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffULL;
      h *= 0x100000001b3ULL;
    }
  };
  mix(base_seed);
  for (const char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  mix(trial);
  mix(redraw);
  return h;
}

CMatrix haar_unitary(Rng& rng, Eigen::Index n) {
  const CMatrix g = rng.gaussian_matrix(n, n);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    const double a = std::abs(d);
    if (a > 0.0) q.col(i) *= d / a;
  }
  return q;
}

} // namespace semih
