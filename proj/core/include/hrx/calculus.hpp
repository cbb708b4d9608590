#pragma once

#include "hrx/grid.hpp"

namespace hrx {

/// d_k u at node (i,j,k) for one axis; central in the interior, first-order
/// one-sided on the two face layers. out has `components` entries.
void stencil_partial(const DirectionField& u, int i, int j, int k, int axis, double* out);

/// All three partials at a node; out has 3*components entries (axis-major).
void stencil_jacobian(const DirectionField& u, int i, int j, int k, double* out);

JacobianField gradient(const DirectionField& u);

/// Normalize every node to unit length. Throws DegenerateNode if any node
/// norm is below 1e-8.
DirectionField project_to_sphere(const DirectionField& u);
void project_to_sphere_inplace(DirectionField& u);

/// Replace the field outside 2*inner_radius (measured from the grid center)
/// by the normalized spherical average direction at inner_radius, geodesic
/// interpolation in the annulus. Throws AverageDegenerate if the average
/// direction has norm < 1e-3.
DirectionField flatten_far_field(const DirectionField& u, double inner_radius);

/// Trilinear sample of a direction field at physical point p (clamped to the
/// box), renormalized. out has `components` entries.
void sample_trilinear(const DirectionField& u, const Vec3& p, double* out);
double sample_trilinear(const ScalarField& f, const Vec3& p);

/// Geodesic interpolation from a toward b by fraction t in [0,1]; inputs and
/// output unit vectors of length ncomp.
void slerp(const double* a, const double* b, double t, int ncomp, double* out);

}  // namespace hrx
