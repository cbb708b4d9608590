#include "hrx/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "hrx/parallel.hpp"

namespace hrx {

void stencil_partial(const DirectionField& u, int i, int j, int k, int axis, double* out) {
    const int C = u.components;
    const int n = u.grid.dims[axis];
    const double h = u.grid.spacing;
    int c3[3] = {i, j, k};
    const int pos = c3[axis];

    auto at = [&](int q) {
        c3[axis] = q;
        return u.node(u.grid.index(c3[0], c3[1], c3[2]));
    };

    if (pos == 0) {
        const double* a = at(1);
        const double* b = at(0);
        for (int c = 0; c < C; ++c) out[c] = (a[c] - b[c]) / h;
    } else if (pos == n - 1) {
        const double* a = at(n - 1);
        const double* b = at(n - 2);
        for (int c = 0; c < C; ++c) out[c] = (a[c] - b[c]) / h;
    } else {
        const double* a = at(pos + 1);
        const double* b = at(pos - 1);
        for (int c = 0; c < C; ++c) out[c] = (a[c] - b[c]) / (2.0 * h);
    }
    c3[axis] = pos;
}

void stencil_jacobian(const DirectionField& u, int i, int j, int k, double* out) {
    for (int ax = 0; ax < 3; ++ax) stencil_partial(u, i, j, k, ax, out + ax * u.components);
}

JacobianField gradient(const DirectionField& u) {
    JacobianField J(u.grid, u.components);
    const auto [nx, ny, nz] = u.grid.dims;
    parallel_for_planes(nz, [&](int k) {
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                stencil_jacobian(u, i, j, k, J.node(u.grid.index(i, j, k)));
    });
    return J;
}

void project_to_sphere_inplace(DirectionField& u) {
    const std::size_t n = u.grid.node_count();
    const int C = u.components;
    std::size_t bad = n;
    for (std::size_t p = 0; p < n; ++p) {
        double* q = u.node(p);
        double s = 0.0;
        for (int c = 0; c < C; ++c) s += q[c] * q[c];
        const double r = std::sqrt(s);
        if (r < 1e-8) { bad = p; break; }
        for (int c = 0; c < C; ++c) q[c] /= r;
    }
    if (bad != n)
        throw DegenerateNode("project_to_sphere: node norm below 1e-8 at linear index " +
                             std::to_string(bad));
}

DirectionField project_to_sphere(const DirectionField& u) {
    DirectionField v = u;
    project_to_sphere_inplace(v);
    return v;
}

void slerp(const double* a, const double* b, double t, int ncomp, double* out) {
    double d = 0.0;
    for (int c = 0; c < ncomp; ++c) d += a[c] * b[c];
    d = std::clamp(d, -1.0, 1.0);
    const double ang = std::acos(d);
    const double sa = std::sin(ang);
    double wa, wb;
    if (sa > 1e-12) {
        wa = std::sin((1.0 - t) * ang) / sa;
        wb = std::sin(t * ang) / sa;
    } else {
        wa = 1.0 - t;
        wb = t;
    }
    double s = 0.0;
    for (int c = 0; c < ncomp; ++c) {
        out[c] = wa * a[c] + wb * b[c];
        s += out[c] * out[c];
    }
    s = std::sqrt(s);
    if (s < 1e-14) {  // antipodal with t ~ 1/2: any great-circle midpoint; pick a stable one
        out[0] = -a[1]; out[1] = a[0];
        for (int c = 2; c < ncomp; ++c) out[c] = a[c];
        s = 0.0;
        for (int c = 0; c < ncomp; ++c) s += out[c] * out[c];
        s = std::sqrt(s);
    }
    for (int c = 0; c < ncomp; ++c) out[c] /= s;
}

DirectionField flatten_far_field(const DirectionField& u, double inner_radius) {
    if (u.boundary_tag != BoundaryTag::far_field_constant)
        throw ConfigError("flatten_far_field: boundary_tag must be far_field_constant");
    const Vec3 ext = u.grid.extent();
    const double half_min = 0.5 * std::min({ext.x, ext.y, ext.z});
    if (!(inner_radius > 0.0) || inner_radius >= half_min)
        throw ConfigError("flatten_far_field: inner_radius must lie in (0, half extent)");

    const Vec3 c0 = u.grid.center();
    const auto [nx, ny, nz] = u.grid.dims;
    const int C = u.components;
    const double h = u.grid.spacing;

    // The annulus is rebuilt from the field trace on a sphere strictly inside
    // inner_radius; every node the operation writes has r > inner_radius, so
    // the trace sphere (stencil included) is untouched and a second
    // application reproduces identical floats.
    const double r_trace = std::max(0.5 * inner_radius, inner_radius - 2.0 * h * 1.7320508075688772);

    const int nsamp = 512;
    std::array<double, 4> avg{0, 0, 0, 0};
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int s = 0; s < nsamp; ++s) {
        const double zc = 1.0 - 2.0 * (s + 0.5) / nsamp;
        const double rho = std::sqrt(std::max(0.0, 1.0 - zc * zc));
        const double phi = golden * s;
        Vec3 p = c0 + Vec3{rho * std::cos(phi), rho * std::sin(phi), zc} * r_trace;
        double val[4];
        sample_trilinear(u, p, val);
        for (int c = 0; c < C; ++c) avg[c] += val[c];
    }
    double an = 0.0;
    for (int c = 0; c < C; ++c) {
        avg[c] /= nsamp;
        an += avg[c] * avg[c];
    }
    an = std::sqrt(an);
    if (an < 1e-3)
        throw AverageDegenerate("flatten_far_field: average direction norm " +
                                std::to_string(an) + " < 1e-3; enlarge inner_radius");
    double cdir[4];
    for (int c = 0; c < C; ++c) cdir[c] = avg[c] / an;

    DirectionField v = u;
    parallel_for_planes(nz, [&](int k) {
        double trace[4], out[4];
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const std::size_t n = u.grid.index(i, j, k);
                const Vec3 d = u.grid.position(i, j, k) - c0;
                const double r = norm(d);
                if (r <= inner_radius) continue;
                const double t = std::min(1.0, (r - inner_radius) / inner_radius);
                if (t >= 1.0) {
                    for (int c = 0; c < C; ++c) v.node(n)[c] = cdir[c];
                } else {
                    sample_trilinear(u, c0 + d * (r_trace / r), trace);
                    slerp(trace, cdir, t, C, out);
                    for (int c = 0; c < C; ++c) v.node(n)[c] = out[c];
                }
            }
    });
    for (int c = 0; c < 4; ++c) v.far_constant[c] = c < C ? cdir[c] : 0.0;
    return v;
}

void sample_trilinear(const DirectionField& u, const Vec3& p, double* out) {
    const GridSpec& g = u.grid;
    const int C = u.components;
    double f[3];
    int i0[3];
    const double pc[3] = {p.x, p.y, p.z};
    const double oc[3] = {g.origin.x, g.origin.y, g.origin.z};
    for (int a = 0; a < 3; ++a) {
        double t = (pc[a] - oc[a]) / g.spacing;
        t = std::clamp(t, 0.0, double(g.dims[a] - 1));
        i0[a] = std::min(int(t), g.dims[a] - 2);
        f[a] = t - i0[a];
    }
    for (int c = 0; c < C; ++c) out[c] = 0.0;
    for (int dk = 0; dk < 2; ++dk)
        for (int dj = 0; dj < 2; ++dj)
            for (int di = 0; di < 2; ++di) {
                const double w = (di ? f[0] : 1 - f[0]) * (dj ? f[1] : 1 - f[1]) * (dk ? f[2] : 1 - f[2]);
                const double* q = u.node(g.index(i0[0] + di, i0[1] + dj, i0[2] + dk));
                for (int c = 0; c < C; ++c) out[c] += w * q[c];
            }
    double s = 0.0;
    for (int c = 0; c < C; ++c) s += out[c] * out[c];
    s = std::sqrt(s);
    if (s > 1e-14)
        for (int c = 0; c < C; ++c) out[c] /= s;
}

double sample_trilinear(const ScalarField& fld, const Vec3& p) {
    const GridSpec& g = fld.grid;
    double f[3];
    int i0[3];
    const double pc[3] = {p.x, p.y, p.z};
    const double oc[3] = {g.origin.x, g.origin.y, g.origin.z};
    for (int a = 0; a < 3; ++a) {
        double t = (pc[a] - oc[a]) / g.spacing;
        t = std::clamp(t, 0.0, double(g.dims[a] - 1));
        i0[a] = std::min(int(t), g.dims[a] - 2);
        f[a] = t - i0[a];
    }
    double out = 0.0;
    for (int dk = 0; dk < 2; ++dk)
        for (int dj = 0; dj < 2; ++dj)
            for (int di = 0; di < 2; ++di) {
                const double w = (di ? f[0] : 1 - f[0]) * (dj ? f[1] : 1 - f[1]) * (dk ? f[2] : 1 - f[2]);
                out += w * fld[g.index(i0[0] + di, i0[1] + dj, i0[2] + dk)];
            }
    return out;
}

}  // namespace hrx
