#pragma once

#include "semih/opcalc.hpp"
#include "semih/rng.hpp"

#include <vector>

namespace semih {

/// Sampled A-numerical range: boundary points from the support-function
/// sweep, the numerical radius, and the convex hull of the boundary.
struct NumRangeResult {
  std::vector<double> angles;     // ascending, 2 pi k / n_angles
  std::vector<Complex> boundary;  // <M y_k, y_k> for the extreme eigenvector y_k
  double radius = 0.0;            // w_A
  std::vector<Complex> hull;      // convex polygon vertices, counter-clockwise
  bool approximate = false;       // true for the Monte-Carlo fallback
};

/// Boundary of W_A(T) = W(M) by sweeping the extreme eigenvalue of the
/// rotated Hermitian part Re(e^{-i theta} M). Requires T in B_{A^{1/2}}
/// and n_angles >= 8.
NumRangeResult numrange(const SemiOperator& op, int n_angles = 720);

/// Monte-Carlo sample of W_A(T) for arbitrary T: <Tx, x>_A over random
/// A-normalized x. Flagged approximate; for T outside B_{A^{1/2}} the set
/// may be unbounded and the sample only indicates its extent.
NumRangeResult numrange_sample_general(const SemiSpace& sp, const CMatrix& T,
                                       int n_samples, std::uint64_t seed);

/// True iff the boundary is real to within tol * (1 + |M|); second member
/// is the largest |Im| observed. Requires T in B_A.
std::pair<bool, double> is_real_range(const SemiOperator& op, double tol);

/// Monotone-chain convex hull. Degenerate inputs (single point, collinear
/// sets) return the degenerate polygon; empty input is an error.
std::vector<Complex> conv_hull(std::vector<Complex> points);

/// Euclidean distance from a point to a convex polygon (0 when inside;
/// handles point- and segment-degenerate hulls).
double point_to_hull_distance(const Complex& z, const std::vector<Complex>& hull);

/// Hausdorff distance between two convex polygons (max vertex-to-set
/// distance in both directions).
double hull_hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b);

} // namespace semih
