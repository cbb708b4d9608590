#pragma once

#include <functional>

namespace hrx {

/// Adaptive Gauss-Kronrod 15-point quadrature on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, double abs_tol = 1e-14, int max_depth = 40);

/// Adaptive quadrature on [a, inf) via the substitution r = a + t/(1-t).
double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             double rel_tol = 1e-12, double abs_tol = 1e-14);

/// Tensor Gauss-Legendre integral of f(|x|) over the cube [-half_width, half_width]^3.
/// Exploits octant symmetry; n is the per-axis rule order.
double integrate_radial_over_box(const std::function<double(double)>& f,
                                 double half_width, int n = 96);

/// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, double* nodes, double* weights);

}  // namespace hrx
