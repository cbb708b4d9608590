#include "hrx/energy.hpp"

#include <algorithm>
#include <cmath>

#include "hrx/calculus.hpp"
#include "hrx/parallel.hpp"

namespace hrx {

namespace {

inline double grad_sq(const double* J, int C) {
    double s = 0.0;
    for (int t = 0; t < 3 * C; ++t) s += J[t] * J[t];
    return s;
}

inline double cross_sum(const double* J) {  // components == 3, unhalved
    double s = 0.0;
    for (int k = 0; k < 3; ++k)
        for (int l = k + 1; l < 3; ++l) {
            const Vec3 a{J[3 * k], J[3 * k + 1], J[3 * k + 2]};
            const Vec3 b{J[3 * l], J[3 * l + 1], J[3 * l + 2]};
            s += norm2(cross(a, b));
        }
    return s;
}

template <typename F>
double node_quadrature(const DirectionField& u, F&& density) {
    const auto [nx, ny, nz] = u.grid.dims;
    const double h3 = u.grid.spacing * u.grid.spacing * u.grid.spacing;
    const int C = u.components;
    double sum = plane_sum(nz, [&](int k) {
        double J[12];
        double s = 0.0;
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                stencil_jacobian(u, i, j, k, J);
                s += density(J, C);
            }
        return s;
    });
    return h3 * sum;
}

}  // namespace

double dirichlet_energy(const DirectionField& u) {
    return node_quadrature(u, [](const double* J, int C) { return grad_sq(J, C); });
}

double quartic_energy(const DirectionField& u) {
    return node_quadrature(u, [](const double* J, int C) {
        const double g = grad_sq(J, C);
        return g * g;
    });
}

double cross_energy(const DirectionField& u) {
    if (u.components != 3)
        throw ConfigError("cross_energy: defined for S^2-valued fields only");
    return node_quadrature(u, [](const double* J, int) { return 0.5 * cross_sum(J); });
}

EnergyReport perturbed_energy(const DirectionField& u, double epsilon, EnergyMode mode) {
    if (epsilon < 0.0) throw ConfigError("perturbed_energy: epsilon must be >= 0");
    EnergyReport r;
    r.mode = mode;
    r.epsilon = epsilon;
    r.dirichlet = dirichlet_energy(u);
    r.quartic = quartic_energy(u);
    if (mode == EnergyMode::faddeev) {
        r.cross = cross_energy(u);
        r.total = r.dirichlet + r.cross + epsilon * r.quartic;
    } else {
        r.cross = 0.0;
        r.total = r.dirichlet + epsilon * epsilon * r.quartic;
    }
    return r;
}

namespace {

// Sorted subcell radius events around a fixed center. Each node cell is split
// 2x2x2; an event carries 1/8 of the node's cell integral and activates once
// the ball radius passes the subcell center. Ball integrals of any node
// density then become prefix sums, exact for the subsampled weighting.
struct RadialEvents {
    std::vector<double> dist;             // sorted subcell distances
    std::vector<std::vector<double>> cum;  // one prefix-sum array per density

    double ball_integral(int which, double r) const {
        const auto it = std::upper_bound(dist.begin(), dist.end(), r);
        const std::size_t m = std::size_t(it - dist.begin());
        return m == 0 ? 0.0 : cum[which][m - 1];
    }
};

RadialEvents build_events(const DirectionField& u, const Vec3& center, double rmax,
                          const std::vector<std::vector<double>>& node_density) {
    const GridSpec& g = u.grid;
    const auto [nx, ny, nz] = g.dims;
    const double h = g.spacing;
    const double w8 = h * h * h / 8.0;
    const double reach = rmax + h;  // subcell centers of a node at distance < rmax + h

    std::vector<std::pair<double, std::size_t>> ev;  // (distance, node)
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const Vec3 p = g.position(i, j, k);
                if (norm(p - center) > reach) continue;
                const std::size_t n = g.index(i, j, k);
                for (int s = 0; s < 8; ++s) {
                    const Vec3 sub = p + Vec3{(s & 1) ? 0.25 * h : -0.25 * h,
                                              (s & 2) ? 0.25 * h : -0.25 * h,
                                              (s & 4) ? 0.25 * h : -0.25 * h};
                    const double d = norm(sub - center);
                    if (d <= rmax) ev.emplace_back(d, n);
                }
            }
    std::sort(ev.begin(), ev.end());

    RadialEvents out;
    out.dist.reserve(ev.size());
    out.cum.assign(node_density.size(), {});
    for (auto& c : out.cum) c.reserve(ev.size());
    std::vector<double> running(node_density.size(), 0.0);
    for (const auto& [d, n] : ev) {
        out.dist.push_back(d);
        for (std::size_t q = 0; q < node_density.size(); ++q) {
            running[q] += w8 * node_density[q][n];
            out.cum[q].push_back(running[q]);
        }
    }
    return out;
}

}  // namespace

std::vector<MonotonicityRow> monotonicity_check(const DirectionField& u, double epsilon,
                                                const Vec3& center,
                                                const std::vector<double>& radii) {
    if (radii.size() < 2) throw ConfigError("monotonicity_check: need at least two radii");
    std::vector<double> rs = radii;
    std::sort(rs.begin(), rs.end());
    const double rmax = rs.back();

    const GridSpec& g = u.grid;
    const Vec3 lo = g.origin;
    const Vec3 hi = g.origin + g.extent();
    if (center.x - rmax < lo.x || center.y - rmax < lo.y || center.z - rmax < lo.z ||
        center.x + rmax > hi.x || center.y + rmax > hi.y || center.z + rmax > hi.z)
        throw BallOutsideDomain("monotonicity_check: ball of radius " + std::to_string(rmax) +
                                " leaves the grid box");

    const auto [nx, ny, nz] = g.dims;
    const std::size_t N = g.node_count();
    const double e2 = epsilon * epsilon;

    // node densities: e = g2 + eps^2 g4, radial term (1+2 eps^2 g2)|d_r u|^2 / r,
    // and 2 eps^2 g4 for the correction integral
    std::vector<std::vector<double>> dens(3, std::vector<double>(N, 0.0));
    parallel_for_planes(nz, [&](int k) {
        double J[12];
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const std::size_t n = g.index(i, j, k);
                stencil_jacobian(u, i, j, k, J);
                const int C = u.components;
                const double g2 = grad_sq(J, C);
                const Vec3 rel = g.position(i, j, k) - center;
                const double r = norm(rel);
                double dr2 = 0.0;
                if (r > 1e-12) {
                    const Vec3 rhat = rel / r;
                    for (int c = 0; c < C; ++c) {
                        const double v = rhat.x * J[0 * C + c] + rhat.y * J[1 * C + c] +
                                         rhat.z * J[2 * C + c];
                        dr2 += v * v;
                    }
                }
                dens[0][n] = g2 + e2 * g2 * g2;
                dens[1][n] = r > 1e-12 ? (1.0 + 2.0 * e2 * g2) * dr2 / r : 0.0;
                dens[2][n] = 2.0 * e2 * g2 * g2;
            }
    });

    const RadialEvents ev = build_events(u, center, rmax, dens);

    auto correction = [&](double rho, double R) {
        // int_rho^R r^-2 * BallInt(2 eps^2 g4, r) dr, exact for the staircase
        const auto lo_it = std::upper_bound(ev.dist.begin(), ev.dist.end(), rho);
        const auto hi_it = std::upper_bound(ev.dist.begin(), ev.dist.end(), R);
        double acc = 0.0;
        double r_prev = rho;
        double q_prev = ev.ball_integral(2, rho);
        for (auto it = lo_it; it != hi_it; ++it) {
            acc += q_prev * (1.0 / r_prev - 1.0 / *it);
            q_prev += ev.cum[2][std::size_t(it - ev.dist.begin())] -
                      (it == ev.dist.begin() ? 0.0 : ev.cum[2][std::size_t(it - ev.dist.begin()) - 1]);
            r_prev = *it;
        }
        acc += q_prev * (1.0 / r_prev - 1.0 / R);
        return acc;
    };

    std::vector<MonotonicityRow> rows;
    for (std::size_t q = 0; q + 1 < rs.size(); ++q) {
        const double rho = rs[q], R = rs[q + 1];
        MonotonicityRow row;
        row.rho = rho;
        row.R = R;
        row.lhs = ev.ball_integral(0, R) / R - ev.ball_integral(0, rho) / rho;
        const double annulus = ev.ball_integral(1, R) - ev.ball_integral(1, rho);
        row.rhs = annulus - correction(rho, R);
        row.residual = row.lhs - row.rhs;
        rows.push_back(row);
    }
    return rows;
}

DensityMap density_map(const DirectionField& u, double epsilon, double eps0,
                       const std::vector<double>& radii) {
    if (!(eps0 > 0.0)) throw ConfigError("density_map: eps0 must be positive");
    if (radii.empty()) throw ConfigError("density_map: need at least one radius");
    std::vector<double> rs = radii;
    std::sort(rs.begin(), rs.end());
    const double rmax = rs.back();

    const GridSpec& g = u.grid;
    const auto [nx, ny, nz] = g.dims;
    const std::size_t N = g.node_count();
    const double h = g.spacing;
    const double e2 = epsilon * epsilon;

    std::vector<double> dens(N, 0.0);
    parallel_for_planes(nz, [&](int k) {
        double J[12];
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                stencil_jacobian(u, i, j, k, J);
                const double g2 = grad_sq(J, u.components);
                dens[g.index(i, j, k)] = g2 + e2 * g2 * g2;
            }
    });

    // translation-invariant subcell offset weights per radius
    const int reach = int(std::ceil(rmax / h)) + 1;
    struct Offset {
        int di, dj, dk;
        std::vector<double> w;  // weight per radius, cell fraction * h^3
    };
    std::vector<Offset> offsets;
    const double h3 = h * h * h;
    for (int dk = -reach; dk <= reach; ++dk)
        for (int dj = -reach; dj <= reach; ++dj)
            for (int di = -reach; di <= reach; ++di) {
                const Vec3 base{h * di, h * dj, h * dk};
                std::vector<double> w(rs.size(), 0.0);
                bool any = false;
                for (int s = 0; s < 8; ++s) {
                    const Vec3 sub = base + Vec3{(s & 1) ? 0.25 * h : -0.25 * h,
                                                 (s & 2) ? 0.25 * h : -0.25 * h,
                                                 (s & 4) ? 0.25 * h : -0.25 * h};
                    const double d = norm(sub);
                    for (std::size_t q = 0; q < rs.size(); ++q)
                        if (d <= rs[q]) { w[q] += h3 / 8.0; any = true; }
                }
                if (any) offsets.push_back({di, dj, dk, std::move(w)});
            }

    DensityMap out;
    out.radii = rs;
    out.eps0 = eps0;
    const int margin = reach;
    std::vector<std::vector<std::pair<std::size_t, std::vector<double>>>> flagged_per_plane(nz);
    parallel_for_planes(nz, [&](int k) {
        if (k < margin || k >= nz - margin) return;
        for (int j = margin; j < ny - margin; ++j)
            for (int i = margin; i < nx - margin; ++i) {
                std::vector<double> ratio(rs.size(), 0.0);
                for (const Offset& o : offsets) {
                    const double v = dens[g.index(i + o.di, j + o.dj, k + o.dk)];
                    for (std::size_t q = 0; q < rs.size(); ++q) ratio[q] += o.w[q] * v;
                }
                bool all = true;
                for (std::size_t q = 0; q < rs.size(); ++q) {
                    ratio[q] /= rs[q];
                    if (ratio[q] <= eps0) all = false;
                }
                if (all) flagged_per_plane[k].emplace_back(g.index(i, j, k), ratio);
            }
    });
    for (int k = 0; k < nz; ++k)
        for (auto& [n, ratio] : flagged_per_plane[k]) {
            out.centers.push_back(n);
            out.ratios.push_back(std::move(ratio));
        }
    return out;
}

}  // namespace hrx
