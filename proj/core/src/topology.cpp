#include "hrx/topology.hpp"

#include <cmath>
#include <complex>

#include "hrx/calculus.hpp"
#include "hrx/parallel.hpp"
#include "hrx/poisson.hpp"

namespace hrx {

namespace {
constexpr double kPi = 3.14159265358979323846;

double field_l2(const VectorField3& v) {
    const std::size_t N = v.grid.node_count();
    double s = 0.0;
    for (std::size_t n = 0; n < N; ++n) s += norm2(v.at(n));
    return std::sqrt(s);
}
}  // namespace

VectorField3 pullback_field(const DirectionField& u) {
    if (u.components != 3)
        throw ConfigError("pullback_field: S^2-valued input required");
    VectorField3 D(u.grid);
    const auto [nx, ny, nz] = u.grid.dims;
    parallel_for_planes(nz, [&](int k) {
        double J[9];
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const std::size_t n = u.grid.index(i, j, k);
                stencil_jacobian(u, i, j, k, J);
                const Vec3 p1{J[0], J[1], J[2]};
                const Vec3 p2{J[3], J[4], J[5]};
                const Vec3 p3{J[6], J[7], J[8]};
                const Vec3 uv = u.vec3(n);
                D.set(n, {dot(uv, cross(p2, p3)), dot(uv, cross(p3, p1)), dot(uv, cross(p1, p2))});
            }
    });
    return D;
}

CoulombGauge coulomb_gauge(const DirectionField& u, double tol) {
    const VectorField3 D = pullback_field(u);
    const GridSpec& g = u.grid;
    const auto [nx, ny, nz] = g.dims;

    double maxD = 0.0, maxBoundary = 0.0;
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const double a = norm(D.at(g.index(i, j, k)));
                maxD = std::max(maxD, a);
                if (g.on_boundary(i, j, k)) maxBoundary = std::max(maxBoundary, a);
            }
    if (maxD > 0.0 && maxBoundary > 1e-6 * maxD)
        throw NonCompactSupport("coulomb_gauge: boundary-layer |D| = " +
                                std::to_string(maxBoundary) + " exceeds 1e-6 * max|D| = " +
                                std::to_string(1e-6 * maxD) +
                                "; flatten the far field first");

    SpectralSolver solver(g);
    CoulombGauge out;
    out.tol = tol;
    out.eta = solver.curl_inverse(D);

    const VectorField3 Dsol = solver.solenoidal_part(D);
    const VectorField3 curl_eta = solver.periodic_curl(out.eta);
    const ScalarField div_eta = solver.periodic_divergence(out.eta);

    const double normD = field_l2(D);
    double curl_err = 0.0, div_err = 0.0, nonsol = 0.0;
    const std::size_t N = g.node_count();
    for (std::size_t n = 0; n < N; ++n) {
        curl_err += norm2(curl_eta.at(n) - Dsol.at(n));
        div_err += div_eta[n] * div_eta[n];
        nonsol += norm2(D.at(n) - Dsol.at(n));
    }
    const double denom = normD > 0.0 ? normD : 1.0;
    out.curl_residual = std::sqrt(curl_err) / denom;
    out.div_residual = std::sqrt(div_err) / denom;
    out.nonsolenoidal = std::sqrt(nonsol) / denom;

    if (out.curl_residual > tol || out.div_residual > 10.0 * tol)
        throw SolverDiverged("coulomb_gauge: residuals exceed tolerance (curl " +
                             std::to_string(out.curl_residual) + ", div " +
                             std::to_string(out.div_residual) + ", tol " + std::to_string(tol) + ")");
    return out;
}

HopfCharge hopf_charge_given(const DirectionField& u, const CoulombGauge& gauge) {
    const VectorField3 D = pullback_field(u);
    const GridSpec& g = u.grid;
    const double h3 = g.spacing * g.spacing * g.spacing;
    const auto [nx, ny, nz] = g.dims;
    const double s = plane_sum(nz, [&](int k) {
        double acc = 0.0;
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const std::size_t n = g.index(i, j, k);
                acc += dot(gauge.eta.at(n), D.at(n));
            }
        return acc;
    });
    HopfCharge q;
    q.value = h3 * s / (16.0 * kPi * kPi);
    q.rounded = int(std::lround(q.value));
    q.defect = std::abs(q.value - q.rounded);
    q.warn_large_defect = q.defect > 0.25;
    q.div_residual = gauge.div_residual;
    q.curl_residual = gauge.curl_residual;
    return q;
}

HopfCharge hopf_charge(const DirectionField& u, double tol) {
    return hopf_charge_given(u, coulomb_gauge(u, tol));
}

Vec3 hopf_map(const Vec4& p) {
    return {2.0 * (p.a * p.c + p.b * p.d),
            2.0 * (p.b * p.c - p.a * p.d),
            p.a * p.a + p.b * p.b - p.c * p.c - p.d * p.d};
}

VectorField3 alpha_pullback(const DirectionField& v) {
    if (v.components != 4)
        throw ConfigError("alpha_pullback: S^3-valued input required");
    VectorField3 out(v.grid);
    const auto [nx, ny, nz] = v.grid.dims;
    parallel_for_planes(nz, [&](int k) {
        double J[12];
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const std::size_t n = v.grid.index(i, j, k);
                stencil_jacobian(v, i, j, k, J);
                const double* p = v.node(n);
                Vec3 z;
                for (int ax = 0; ax < 3; ++ax) {
                    const double* d = J + 4 * ax;
                    z[ax] = -2.0 * (p[0] * d[1] - p[1] * d[0] + p[2] * d[3] - p[3] * d[2]);
                }
                out.set(n, z);
            }
    });
    return out;
}

namespace {

// local section of the fibration over S^2 minus the south pole
inline Vec4 section(const Vec3& w) {
    const double opz = std::max(1.0 + w.z, 1e-13);
    const double A = std::sqrt(0.5 * opz);
    const double B = 0.5 / A;
    Vec4 s{A, 0.0, w.x * B, -w.y * B};
    const double nn = norm(s);
    return s * (1.0 / nn);
}

// conjugate-gradient solve of the link least-squares problem
// min_theta sum_links | (theta_b - theta_a)/h - t_link |^2
ScalarField solve_phase(const GridSpec& g, const VectorField3& target) {
    const auto [nx, ny, nz] = g.dims;
    const double h = g.spacing;
    const std::size_t N = g.node_count();

    // rhs = G^T t with t averaged onto links
    auto apply_GtG = [&](const std::vector<double>& x, std::vector<double>& y) {
        std::fill(y.begin(), y.end(), 0.0);
        for (int k = 0; k < nz; ++k)
            for (int j = 0; j < ny; ++j)
                for (int i = 0; i < nx; ++i) {
                    const std::size_t a = g.index(i, j, k);
                    if (i + 1 < nx) {
                        const std::size_t b = g.index(i + 1, j, k);
                        const double d = (x[b] - x[a]) / (h * h);
                        y[a] -= d;
                        y[b] += d;
                    }
                    if (j + 1 < ny) {
                        const std::size_t b = g.index(i, j + 1, k);
                        const double d = (x[b] - x[a]) / (h * h);
                        y[a] -= d;
                        y[b] += d;
                    }
                    if (k + 1 < nz) {
                        const std::size_t b = g.index(i, j, k + 1);
                        const double d = (x[b] - x[a]) / (h * h);
                        y[a] -= d;
                        y[b] += d;
                    }
                }
    };

    std::vector<double> rhs(N, 0.0);
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const std::size_t a = g.index(i, j, k);
                if (i + 1 < nx) {
                    const std::size_t b = g.index(i + 1, j, k);
                    const double t = 0.5 * (target.at(a).x + target.at(b).x) / h;
                    rhs[a] -= t;
                    rhs[b] += t;
                }
                if (j + 1 < ny) {
                    const std::size_t b = g.index(i, j + 1, k);
                    const double t = 0.5 * (target.at(a).y + target.at(b).y) / h;
                    rhs[a] -= t;
                    rhs[b] += t;
                }
                if (k + 1 < nz) {
                    const std::size_t b = g.index(i, j, k + 1);
                    const double t = 0.5 * (target.at(a).z + target.at(b).z) / h;
                    rhs[a] -= t;
                    rhs[b] += t;
                }
            }

    std::vector<double> x(N, 0.0), r = rhs, p = rhs, Ap(N, 0.0);
    double rr = 0.0;
    for (std::size_t n = 0; n < N; ++n) rr += r[n] * r[n];
    const double rr0 = rr > 0.0 ? rr : 1.0;
    for (int it = 0; it < 800 && rr / rr0 > 1e-20; ++it) {
        apply_GtG(p, Ap);
        double pAp = 0.0;
        for (std::size_t n = 0; n < N; ++n) pAp += p[n] * Ap[n];
        if (pAp <= 0.0) break;  // null-space direction (constant shift)
        const double alpha = rr / pAp;
        double rr_new = 0.0;
        for (std::size_t n = 0; n < N; ++n) {
            x[n] += alpha * p[n];
            r[n] -= alpha * Ap[n];
            rr_new += r[n] * r[n];
        }
        const double beta = rr_new / rr;
        rr = rr_new;
        for (std::size_t n = 0; n < N; ++n) p[n] = r[n] + beta * p[n];
    }

    ScalarField theta(g);
    theta.values = std::move(x);
    // pin the free constant: theta = 0 at the box center node
    const double c = theta[g.index(g.dims[0] / 2, g.dims[1] / 2, g.dims[2] / 2)];
    for (auto& v : theta.values) v -= c;
    return theta;
}

}  // namespace

LiftResult lift_residuals(const DirectionField& u, const DirectionField& lift,
                          const VectorField3& eta) {
    if (lift.components != 4) throw ConfigError("lift_residuals: lift must be S^3-valued");
    const GridSpec& g = u.grid;
    const std::size_t N = g.node_count();

    const VectorField3 zeta = alpha_pullback(lift);
    const JacobianField Ju = gradient(u);
    const JacobianField Jl = gradient(lift);

    double num_id = 0.0, den_id = 0.0, num_pb = 0.0, den_pb = 0.0, maxproj = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
        double g2u = 0.0, g2l = 0.0;
        const double* a = Ju.node(n);
        for (int t = 0; t < 9; ++t) g2u += a[t] * a[t];
        const double* b = Jl.node(n);
        for (int t = 0; t < 12; ++t) g2l += b[t] * b[t];
        const double resid = g2l - 0.25 * norm2(eta.at(n)) - 0.25 * g2u;
        num_id += resid * resid;
        den_id += g2l * g2l;
        num_pb += norm2(zeta.at(n) - eta.at(n));
        den_pb += norm2(eta.at(n));
        const Vec3 proj = hopf_map(lift.vec4(n));
        maxproj = std::max(maxproj, norm(proj - u.vec3(n)));
    }

    LiftResult out;
    out.lift = lift;
    out.identity_residual = std::sqrt(num_id / (den_id > 0 ? den_id : 1.0));
    out.pullback_residual = std::sqrt(num_pb / (den_pb > 0 ? den_pb : 1.0));
    out.max_projection_error = maxproj;
    return out;
}

LiftResult hopf_lift(const DirectionField& u, const CoulombGauge& gauge) {
    if (u.components != 3) throw ConfigError("hopf_lift: S^2-valued input required");
    const GridSpec& g = u.grid;
    const std::size_t N = g.node_count();

    std::size_t bad = 0;
    for (std::size_t n = 0; n < N; ++n)
        if (u.vec3(n).z < -1.0 + 1e-6) ++bad;
    if (bad > N / 1000)
        throw SectionSingular("hopf_lift: " + std::to_string(bad) +
                              " nodes at the section's bad point (south pole); rotate the target");

    DirectionField v(g, 4, u.boundary_tag);
    for (std::size_t n = 0; n < N; ++n) v.set(n, section(u.vec3(n)));

    // phase so that v*(2 alpha) shifted by -2 grad(theta) best matches eta
    const VectorField3 zeta_v = alpha_pullback(v);
    VectorField3 target(g);
    for (std::size_t n = 0; n < N; ++n) target.set(n, (zeta_v.at(n) - gauge.eta.at(n)) * 0.5);
    const ScalarField theta = solve_phase(g, target);

    for (std::size_t n = 0; n < N; ++n) {
        const double* p = v.node(n);
        const std::complex<double> ph = std::polar(1.0, theta[n]);
        const std::complex<double> z1 = std::complex<double>(p[0], p[1]) * ph;
        const std::complex<double> z2 = std::complex<double>(p[2], p[3]) * ph;
        v.set(n, Vec4{z1.real(), z1.imag(), z2.real(), z2.imag()});
    }
    for (int c = 0; c < 4; ++c) v.far_constant[c] = v.node(g.index(0, 0, 0))[c];
    return lift_residuals(u, v, gauge.eta);
}

VectorField3 biot_savart_direct(const VectorField3& D) {
    const GridSpec& g = D.grid;
    const auto [nx, ny, nz] = g.dims;
    const double h3 = g.spacing * g.spacing * g.spacing;
    VectorField3 eta(g);
    parallel_for_planes(nz, [&](int k) {
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const Vec3 x = g.position(i, j, k);
                Vec3 acc{0, 0, 0};
                for (int kk = 0; kk < nz; ++kk)
                    for (int jj = 0; jj < ny; ++jj)
                        for (int ii = 0; ii < nx; ++ii) {
                            if (ii == i && jj == j && kk == k) continue;
                            const Vec3 d = x - g.position(ii, jj, kk);
                            const double r = norm(d);
                            acc += cross(D.at(g.index(ii, jj, kk)), d) * (1.0 / (r * r * r));
                        }
                eta.set(g.index(i, j, k), acc * (h3 / (4.0 * kPi)));
            }
    });
    return eta;
}

}  // namespace hrx
