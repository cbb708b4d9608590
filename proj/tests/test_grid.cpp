#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "hrx/calculus.hpp"
#include "hrx/field_io.hpp"
#include "hrx/grid.hpp"

using namespace hrx;

namespace {

DirectionField sine_map(const GridSpec& g, double a) {
    // u(x) = (sin(a x1), 0, cos(a x1)), already unit norm
    DirectionField u(g, 3, BoundaryTag::free_boundary);
    for (int k = 0; k < g.dims[2]; ++k)
        for (int j = 0; j < g.dims[1]; ++j)
            for (int i = 0; i < g.dims[0]; ++i) {
                const Vec3 p = g.position(i, j, k);
                u.set(g.index(i, j, k), Vec3{std::sin(a * p.x), 0.0, std::cos(a * p.x)});
            }
    return u;
}

double max_partial_error_interior(const DirectionField& u, double a) {
    // against the analytic d/dx1 of the sine map
    const GridSpec& g = u.grid;
    const JacobianField J = gradient(u);
    double worst = 0.0;
    for (int k = 1; k < g.dims[2] - 1; ++k)
        for (int j = 1; j < g.dims[1] - 1; ++j)
            for (int i = 1; i < g.dims[0] - 1; ++i) {
                const Vec3 p = g.position(i, j, k);
                const Vec3 exact{a * std::cos(a * p.x), 0.0, -a * std::sin(a * p.x)};
                const Vec3 got = J.partial3(g.index(i, j, k), 0);
                worst = std::max(worst, norm(got - exact));
            }
    return worst;
}

}  // namespace

TEST_CASE("gradient of a constant field vanishes") {
    GridSpec g = GridSpec::centered_box(8, 1.0);
    DirectionField u(g, 3);
    u.fill_constant({0, 0, 1, 0});
    const JacobianField J = gradient(u);
    for (double v : J.values) CHECK(v == 0.0);
}

TEST_CASE("gradient matches analytic derivative at second order") {
    const double a = 1.3;
    const double e1 = max_partial_error_interior(sine_map(GridSpec::centered_box(17, 1.0), a), a);
    const double e2 = max_partial_error_interior(sine_map(GridSpec::centered_box(33, 1.0), a), a);
    const double order = std::log2(e1 / e2);
    CHECK(order > 1.8);
    CHECK(order < 2.2);
}

TEST_CASE("great-circle map linear in x3 has constant |grad u|^2") {
    const double a = 0.9;
    GridSpec g = GridSpec::centered_box(21, 1.0);
    DirectionField u(g, 3);
    for (int k = 0; k < g.dims[2]; ++k)
        for (int j = 0; j < g.dims[1]; ++j)
            for (int i = 0; i < g.dims[0]; ++i) {
                const Vec3 p = g.position(i, j, k);
                u.set(g.index(i, j, k), Vec3{std::cos(a * p.z), std::sin(a * p.z), 0.0});
            }
    const JacobianField J = gradient(u);
    // interior nodes: |grad u|^2 = a^2 up to O(h^2)
    const double h2 = g.spacing * g.spacing;
    for (int k = 1; k < g.dims[2] - 1; ++k)
        for (int j = 1; j < g.dims[1] - 1; ++j)
            for (int i = 1; i < g.dims[0] - 1; ++i) {
                const double* q = J.node(g.index(i, j, k));
                double g2 = 0.0;
                for (int t = 0; t < 9; ++t) g2 += q[t] * q[t];
                CHECK(std::abs(g2 - a * a) < 2.0 * a * a * a * a * h2);
            }
}

TEST_CASE("project_to_sphere normalizes and flags degenerate nodes") {
    GridSpec g = GridSpec::centered_box(4, 1.0);
    DirectionField u(g, 3);
    u.fill_constant({0, 0, 2, 0});
    DirectionField v = project_to_sphere(u);
    CHECK(v.node(0)[2] == doctest::Approx(1.0).epsilon(1e-15));

    DirectionField w(g, 4);
    w.fill_constant({1, 1, 1, 1});
    DirectionField w2 = project_to_sphere(w);
    for (int c = 0; c < 4; ++c) CHECK(w2.node(0)[c] == doctest::Approx(0.5).epsilon(1e-15));

    // idempotence of normalization for mild perturbations
    DirectionField p(g, 3);
    for (std::size_t n = 0; n < g.node_count(); ++n) {
        const double s = 0.9 + 0.2 * double(n % 7) / 7.0;
        p.set(n, Vec3{0.0, s, 0.0});
    }
    DirectionField q = project_to_sphere(p);
    for (std::size_t n = 0; n < g.node_count(); ++n)
        CHECK(std::abs(norm(q.vec3(n)) - 1.0) <= 1e-15);

    DirectionField d(g, 3);
    d.fill_constant({0, 0, 0, 0});
    CHECK_THROWS_AS(project_to_sphere(d), DegenerateNode);
}

namespace {
DirectionField offset_hedgehog(const GridSpec& g, const Vec3& p) {
    DirectionField u(g, 3, BoundaryTag::far_field_constant);
    for (std::size_t n = 0; n < g.node_count(); ++n) {
        int i = int(n % g.dims[0]);
        int j = int((n / g.dims[0]) % g.dims[1]);
        int k = int(n / (std::size_t(g.dims[0]) * g.dims[1]));
        Vec3 d = g.position(i, j, k) - p;
        double r = norm(d);
        if (r < 1e-12) { d = {0, 0, 1}; r = 1.0; }
        u.set(n, d / r);
    }
    return u;
}
}  // namespace

TEST_CASE("flatten_far_field: fixed point, idempotence, degeneracy rules") {
    GridSpec g = GridSpec::centered_box(24, 2.0);

    SUBCASE("constant-outside field stays put") {
        DirectionField u(g, 3, BoundaryTag::far_field_constant);
        const Vec3 c{0.0, 0.6, 0.8};
        const double rin = 0.9;
        for (int k = 0; k < g.dims[2]; ++k)
            for (int j = 0; j < g.dims[1]; ++j)
                for (int i = 0; i < g.dims[0]; ++i) {
                    const Vec3 p = g.position(i, j, k);
                    // varies only deep inside the inner sphere
                    if (norm(p) < 0.1) {
                        Vec3 v{std::sin(3 * p.x), std::cos(3 * p.y), 1.0};
                        u.set(g.index(i, j, k), v / norm(v));
                    } else {
                        u.set(g.index(i, j, k), c);
                    }
                }
        DirectionField v = flatten_far_field(u, rin);
        for (std::size_t n = 0; n < g.node_count(); ++n)
            CHECK(norm(v.vec3(n) - u.vec3(n)) < 1e-13);
    }

    SUBCASE("bitwise idempotence") {
        DirectionField u = offset_hedgehog(g, Vec3{1.3, 0.1, 0.2});
        DirectionField v1 = flatten_far_field(u, 0.8);
        DirectionField v2 = flatten_far_field(v1, 0.8);
        CHECK(v1.values == v2.values);
        CHECK(v1.far_constant == v2.far_constant);
    }

    SUBCASE("unit norm is preserved") {
        DirectionField u = offset_hedgehog(g, Vec3{1.3, 0.1, 0.2});
        DirectionField v = flatten_far_field(u, 0.8);
        for (std::size_t n = 0; n < g.node_count(); ++n)
            CHECK(std::abs(norm(v.vec3(n)) - 1.0) < 1e-12);
    }

    SUBCASE("hedgehog with the defect outside the trace sphere does not degenerate") {
        DirectionField u = offset_hedgehog(g, Vec3{1.3, 0.0, 0.0});
        CHECK_NOTHROW(flatten_far_field(u, 0.8));
    }

    SUBCASE("surjective-trace field with vanishing average degenerates") {
        DirectionField u(g, 3, BoundaryTag::far_field_constant);
        for (int k = 0; k < g.dims[2]; ++k)
            for (int j = 0; j < g.dims[1]; ++j)
                for (int i = 0; i < g.dims[0]; ++i) {
                    const Vec3 p = g.position(i, j, k);
                    u.set(g.index(i, j, k), Vec3{0.0, 0.0, p.z >= 0.0 ? 1.0 : -1.0});
                }
        CHECK_THROWS_AS(flatten_far_field(u, 0.8), AverageDegenerate);
    }
}

TEST_CASE("SFLD1 round trip is bit exact") {
    GridSpec g;
    g.dims = {5, 4, 3};
    g.spacing = 0.1237546817340913;
    g.origin = {-1.0 / 3.0, 0.7, -2.25};
    DirectionField u(g, 3, BoundaryTag::far_field_constant);
    for (std::size_t n = 0; n < g.node_count(); ++n) {
        Vec3 v{std::sin(0.7 * n + 0.1), std::cos(1.3 * n), 0.4};
        u.set(n, v / norm(v));
    }
    u.far_constant = {u.node(0)[0], u.node(0)[1], u.node(0)[2], 0.0};

    const std::string path = "/tmp/hrx_roundtrip.sfld";
    write_field(u, path);
    DirectionField v = read_field(path);
    CHECK(v.grid.dims == g.dims);
    CHECK(v.grid.spacing == g.spacing);
    CHECK(v.grid.origin.x == g.origin.x);
    CHECK(v.grid.origin.y == g.origin.y);
    CHECK(v.grid.origin.z == g.origin.z);
    CHECK(v.components == 3);
    CHECK(v.boundary_tag == BoundaryTag::far_field_constant);
    CHECK(v.values == u.values);
    std::remove(path.c_str());
}

TEST_CASE("SFLD1 rejects malformed files") {
    const std::string path = "/tmp/hrx_bad.sfld";

    SUBCASE("truncated payload") {
        GridSpec g = GridSpec::centered_box(4, 1.0);
        DirectionField u(g, 3);
        u.fill_constant({0, 0, 1, 0});
        write_field(u, path);
        // chop the file
        std::ifstream in(path, std::ios::binary);
        std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        in.close();
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out.write(all.data(), std::streamsize(all.size() - 13));
        out.close();
        CHECK_THROWS_AS(read_field(path), FormatError);
    }

    SUBCASE("payload count mismatching header dims") {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << "SFLD1 4 4 4 3 0.5 0 0 0 free\n";
        std::vector<double> vals(63 * 3, 1.0);  // one node short
        out.write(reinterpret_cast<const char*>(vals.data()),
                  std::streamsize(vals.size() * sizeof(double)));
        out.close();
        CHECK_THROWS_AS(read_field(path), FormatError);
    }

    SUBCASE("bad magic") {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << "SFLDX 4 4 4 3 0.5 0 0 0 free\n";
        out.close();
        CHECK_THROWS_AS(read_field(path), FormatError);
    }
    std::remove(path.c_str());
}
