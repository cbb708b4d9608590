#pragma once

#include <memory>

#include "hrx/grid.hpp"

namespace hrx {

/// Fourier solver on the zero-padded (2x per axis) periodic extension of the
/// grid, diagonalizing the central-difference operators by their exact
/// symbols s_k = sin(theta_k)/h. Compactly supported sources see free-space
/// behaviour up to the distant periodic images.
class SpectralSolver {
public:
    explicit SpectralSolver(const GridSpec& grid);
    ~SpectralSolver();
    SpectralSolver(const SpectralSolver&) = delete;
    SpectralSolver& operator=(const SpectralSolver&) = delete;

    /// eta with curl_c eta equal to the solenoidal part of D and div_c eta = 0,
    /// realized as eta_hat = i s x D_hat / |s|^2.
    VectorField3 curl_inverse(const VectorField3& D) const;

    /// Discrete Helmholtz projection: w minus its gradient part.
    VectorField3 solenoidal_part(const VectorField3& w) const;

    /// Central-difference curl/divergence on the padded periodic extension,
    /// restricted to the box (consistent with the solver's own operators).
    VectorField3 periodic_curl(const VectorField3& v) const;
    ScalarField periodic_divergence(const VectorField3& v) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace hrx
