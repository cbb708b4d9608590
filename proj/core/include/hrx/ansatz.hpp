#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "hrx/grid.hpp"

namespace hrx {

/// Closed-form reference values for the degree-1 ring ansatz.
namespace consts {
inline const double pi = 3.14159265358979323846;
inline const double sqrt2 = 1.4142135623730951;
/// integral of |grad Phi|^2 over R^3
inline const double dirichlet_phi = 16.0 * sqrt2 * pi * pi;
/// integral of sum_{k<l} |d_k Phi x d_l Phi|^2 over R^3 (unhalved)
inline const double cross_sum_phi = 32.0 * sqrt2 * pi * pi;
/// integral of |grad Phi|^4 over R^3
inline const double quartic_phi = 128.0 * sqrt2 * pi * pi;
/// Faddeev energy of Phi = dirichlet + half the cross sum
inline const double faddeev_phi = 32.0 * sqrt2 * pi * pi;
/// coefficient of the |deg|^{3/4} topological lower bound
inline const double lower_bound_coeff = 168.58743409345652;  // 3^{3/8} * 8 * sqrt2 * pi^2
}  // namespace consts

/// Degree-1 ring soliton ansatz: a Hopf-fibration field pushed to R^3 through
/// stereographic coordinates with core scale a = 1/sqrt(2). Unit norm for all
/// x; tends to (0,0,1) at the origin and at infinity. Templated so that
/// complex-step differentiation yields machine-accurate Jacobians.
template <typename T>
void ward_map_t(T x, T y, T z, T out[3]) {
    const double a = 1.0 / std::sqrt(2.0);
    const T r2 = x * x + y * y + z * z;
    const T s = r2 + a * a;
    const T w = 4.0 * a / (s * s);
    out[0] = w * (2.0 * a * x * z + (r2 - a * a) * y);
    out[1] = w * (2.0 * a * y * z - (r2 - a * a) * x);
    out[2] = 1.0 + 8.0 * a * a / (s * s) * (z * z - r2);
}

Vec3 ward_map(const Vec3& p);

/// Analytic unit lift of ward_map into S^3 (Pi o ward_lift == ward_map).
template <typename T>
void ward_lift_t(T x, T y, T z, T out[4]) {
    const double a = 1.0 / std::sqrt(2.0);
    const T r2 = x * x + y * y + z * z;
    const T s = r2 + a * a;
    out[0] = 2.0 * a * z / s;
    out[1] = -(r2 - a * a) / s;
    out[2] = 2.0 * a * x / s;
    out[3] = -2.0 * a * y / s;
}

Vec4 ward_lift(const Vec3& p);

/// Machine-accurate Jacobians by complex-step differentiation.
void ward_jacobian(const Vec3& p, double J[3][3]);       // J[axis][component]
void ward_lift_jacobian(const Vec3& p, double J[3][4]);

/// Radial densities of the ansatz: d2 = |grad Phi|^2 (from direct
/// differentiation), d4 = d2^2, dcross = 1024/(1+2r^2)^4.
struct WardDensities {
    double d2, d4, dcross;
};
WardDensities ward_densities(double r);

/// Samplers. scale rescales the core (field evaluated at (x - center)/scale);
/// the topological charge is scale-invariant while energies are not.
DirectionField ward_field(const GridSpec& g, const Vec3& center = {0, 0, 0},
                          double scale = 1.0);
DirectionField ward_lift_field(const GridSpec& g, const Vec3& center = {0, 0, 0},
                               double scale = 1.0);

/// Continuum values of the three energy densities integrated over the grid
/// box (Gauss-Legendre; exact to quadrature accuracy) and over its complement.
struct WardBoxReference {
    double dirichlet_box, cross_half_box, quartic_box;
    double dirichlet_tail, cross_half_tail, quartic_tail;  // R^3 minus box
};
WardBoxReference ward_box_reference(double half_width, double scale = 1.0);

/// Point defect (x-p)/|x-p| (sign +1) or its antipode (sign -1, local degree -1).
DirectionField hedgehog(const GridSpec& g, const Vec3& p, int sign);

/// Axisymmetric +1/-1 defect pair at p_plus/p_minus, constant (0,0,1) far
/// away; polar angle is theta_plus - theta_minus around the pair axis.
DirectionField dipole_pair(const GridSpec& g, const Vec3& p_plus, const Vec3& p_minus);

/// Boundary trace: north pole everywhere on the box surface except two
/// disjoint disks carrying one +1 and one -1 covering of the sphere. Interior
/// nodes are set to the north pole; boundary_tag is dirichlet_trace.
/// Disk centers must lie on (or are projected to) the box surface.
DirectionField hardt_lin_boundary(const GridSpec& g, const Vec3& disk_center_plus,
                                  const Vec3& disk_center_minus, double radius);

struct ConstantCheck {
    std::string name;
    double expected;
    double computed;
    double rel_error;
    double tolerance;
    bool pass;
    std::string route;  // "radial-quadrature" or "lattice"
};

/// Closed-form constant table. Radial rows use adaptive quadrature of the
/// differentiated densities (tol_radial); lattice rows evaluate the charge
/// pipeline on lattice_n^3 nodes over [-lattice_hw, lattice_hw]^3.
std::vector<ConstantCheck> verify_constants(double tol_radial = 1e-8,
                                            double tol_lattice_q = 0.1,
                                            double tol_lattice_energy = 1e-2,
                                            int lattice_n = 64,
                                            double lattice_hw = 2.5);

/// Faddeev energy of the ansatz estimated from lattice data: Richardson
/// extrapolation over (n/2)^3 and n^3 samplings of the same box plus the
/// closed-form complement of the box. order is observed against the
/// continuum-on-box reference.
struct LatticeEnergyEstimate {
    double value = 0.0;
    double coarse = 0.0, fine = 0.0;   // raw box sums at n/2 and n
    double box_reference = 0.0;        // continuum value over the box
    double tail = 0.0;                 // closed-form complement
    double order = 0.0;
};
LatticeEnergyEstimate ward_faddeev_lattice_estimate(int n = 64, double half_width = 2.5);

struct SplittingRow {
    std::string decomposition;
    double lhs;      // energy budget that a split configuration must beat
    double rhs;      // topological lower bound of the split
    bool excluded;   // rhs > lhs, so the split cannot happen
};

/// Arithmetic of the no-splitting argument: the charge-1 energy budget
/// 32*sqrt2*pi^2 + 0.01 against the lower bounds of candidate decompositions.
std::vector<SplittingRow> verify_splitting_impossible();

}  // namespace hrx
