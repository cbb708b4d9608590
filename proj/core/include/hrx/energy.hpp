#pragma once

#include <optional>
#include <vector>

#include "hrx/grid.hpp"

namespace hrx {

enum class EnergyMode { harmonic, faddeev };

/// Decomposed energy values for one field at one epsilon.
/// harmonic: total = dirichlet + eps^2 * quartic
/// faddeev:  total = dirichlet + cross + eps * quartic
struct EnergyReport {
    EnergyMode mode = EnergyMode::harmonic;
    double epsilon = 0.0;
    double dirichlet = 0.0;
    double quartic = 0.0;
    double cross = 0.0;
    double total = 0.0;
    std::optional<double> relax_defect;  // 8*pi*L(u) when a connection estimate ran
};

/// Midpoint-rule quadrature h^3 * sum over nodes of |grad u|^2.
double dirichlet_energy(const DirectionField& u);
/// h^3 * sum of |grad u|^4.
double quartic_energy(const DirectionField& u);
/// h^3 * sum of (1/2) sum_{k<l} |d_k u x d_l u|^2; components must be 3.
double cross_energy(const DirectionField& u);

EnergyReport perturbed_energy(const DirectionField& u, double epsilon, EnergyMode mode);

/// One radius pair of the minimizer monotonicity identity.
struct MonotonicityRow {
    double rho, R;
    double lhs;       // R^-1 int_{B_R} e - rho^-1 int_{B_rho} e, e = |grad u|^2 + eps^2 |grad u|^4
    double rhs;       // radial-derivative annulus term minus the eps correction integral
    double residual;  // lhs - rhs
};

/// Evaluates the identity for each consecutive radius pair. Ball integrals
/// use partial-cell weights from 2^3 subsampling. Throws BallOutsideDomain
/// if the largest ball leaves the grid box.
std::vector<MonotonicityRow> monotonicity_check(const DirectionField& u, double epsilon,
                                                const Vec3& center,
                                                const std::vector<double>& radii);

/// Scaled density ratios r^-1 int_{B_r(x0)} (|grad u|^2 + eps^2 |grad u|^4)
/// for singular-set detection.
struct DensityMap {
    std::vector<std::size_t> centers;       // node indices of flagged centers
    std::vector<double> radii;
    std::vector<std::vector<double>> ratios;  // per flagged center, one ratio per radius
    double eps0 = 0.0;
};

/// Flags every interior node whose ratio exceeds eps0 for all sampled radii.
DensityMap density_map(const DirectionField& u, double epsilon, double eps0,
                       const std::vector<double>& radii);

}  // namespace hrx
