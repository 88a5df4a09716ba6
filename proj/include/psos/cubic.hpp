#pragma once

#include <vector>

#include "psos/params.hpp"

namespace psos {

// Root analysis of the x=1 branch cubic
//   theta*y^3 - y^2 + (theta^(2^p)+1)*y - 2*theta = 0.
// roots are the distinct positive real roots in descending order
// (y1 > y2 > y3); when |delta| falls inside the boundary band the double
// root is returned once and double_root is set.
struct CubicAnalysis {
  double delta = 0.0;
  std::vector<double> roots;
  bool double_root = false;
  bool boundary = false;  // |delta| within the ambiguity band of 0
};

// Discriminant of the x=1 cubic:
//   (1/27 theta^2) * [4(1-3theta-3theta^(2^p+1))^3
//                     - (2-9theta+54theta^3-9theta^(2^p+1))^2].
// Positive <=> three positive roots, negative <=> one. May return -inf in the
// far antiferromagnetic regime (theta>1, huge theta_pow); the sign stays
// meaningful.
double cubic_discriminant(const ModelParams& params);

// All positive real roots of the x=1 cubic. Three-real-root case uses the
// trigonometric form (no cancellation near delta=0); single-root case uses
// Cardano followed by a Newton polish on the original cubic. Requires
// m == 2 and k == 2.
CubicAnalysis solve_cubic_x1(const ModelParams& params);

// Defect of a candidate root against the cubic, relative to the largest
// term magnitude.
double cubic_residual(double y, const ModelParams& params);

}  // namespace psos
