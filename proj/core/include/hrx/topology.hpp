#pragma once

#include <optional>

#include "hrx/grid.hpp"

namespace hrx {

/// D(u) = (u . u_x2 x u_x3, u . u_x3 x u_x1, u . u_x1 x u_x2) with the
/// module's finite-difference stencils; the vector proxy of the pulled-back
/// area 2-form.
VectorField3 pullback_field(const DirectionField& u);

struct CoulombGauge {
    VectorField3 eta;
    double div_residual = 0.0;    // |div eta|_2 / |D|_2, interior stencils
    double curl_residual = 0.0;   // |curl eta - P_sol D|_2 / |D|_2, solver self-consistency
    double nonsolenoidal = 0.0;   // |D - P_sol D|_2 / |D|_2, gradient part of the discrete D
    double tol = 0.0;
};

/// Divergence-free eta with curl eta = D(u), via the spectral curl inverse.
/// Requires compactly supported D: throws NonCompactSupport when the
/// boundary-layer |D| exceeds 1e-6 * max|D|; SolverDiverged if residuals
/// exceed tol.
CoulombGauge coulomb_gauge(const DirectionField& u, double tol = 1e-8);

struct HopfCharge {
    double value = 0.0;
    int rounded = 0;
    double defect = 0.0;
    bool warn_large_defect = false;  // set when defect > 0.25
    double div_residual = 0.0;
    double curl_residual = 0.0;
};

/// (16 pi^2)^-1 h^3 sum eta . D with the Coulomb gauge eta.
HopfCharge hopf_charge(const DirectionField& u, double tol = 1e-8);
HopfCharge hopf_charge_given(const DirectionField& u, const CoulombGauge& gauge);

/// The fibration S^3 -> S^2:
/// (2(x1 x3 + x2 x4), 2(x2 x3 - x1 x4), x1^2 + x2^2 - x3^2 - x4^2).
Vec3 hopf_map(const Vec4& p);

/// Pullback v*(2 alpha) of the fibration connection form, oriented so that
/// curl(v*(2 alpha)) matches D(hopf_map o v):
/// component k = -2 (v1 d_k v2 - v2 d_k v1 + v3 d_k v4 - v4 d_k v3).
VectorField3 alpha_pullback(const DirectionField& v);

struct LiftResult {
    DirectionField lift;           // components == 4, Pi o lift == u nodewise
    double identity_residual = 0;  // rel L2 of |grad lift|^2 - (|eta|^2 + |grad u|^2)/4
    double pullback_residual = 0;  // rel L2 of lift*(2 alpha) - eta
    double max_projection_error = 0;  // max |Pi(lift) - u| over nodes
};

/// Lift through a fixed local section away from the target's south pole with
/// a least-squares phase solve matching the gauge. Throws SectionSingular if
/// more than 0.1% of nodes sit at the section's bad point.
LiftResult hopf_lift(const DirectionField& u, const CoulombGauge& gauge);

/// Residuals for an externally supplied lift (e.g. an analytic one).
LiftResult lift_residuals(const DirectionField& u, const DirectionField& lift,
                          const VectorField3& eta);

/// O(N^2) Biot-Savart kernel sum; small-grid cross-check of the spectral path.
VectorField3 biot_savart_direct(const VectorField3& D);

}  // namespace hrx
