#include <cmath>
#include <random>

#include "doctest.h"
#include "hrx/ansatz.hpp"
#include "hrx/quadrature.hpp"
#include "hrx/topology.hpp"

using namespace hrx;

TEST_CASE("ward_map is unit norm everywhere") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> dist(0.0, 3.0);
    double worst = 0.0;
    for (int t = 0; t < 100000; ++t) {
        const Vec3 p{dist(rng), dist(rng), dist(rng)};
        worst = std::max(worst, std::abs(norm(ward_map(p)) - 1.0));
    }
    CHECK(worst <= 1e-12);
    const Vec3 origin = ward_map({0, 0, 0});
    CHECK(origin.x == 0.0);
    CHECK(origin.y == 0.0);
    CHECK(origin.z == doctest::Approx(1.0).epsilon(1e-15));
    const Vec3 far = ward_map({1e8, -2e8, 3e8});
    CHECK(norm(far - Vec3{0, 0, 1}) < 1e-6);
}

TEST_CASE("ward densities: values, radial symmetry, integrals") {
    CHECK(ward_densities(0.0).dcross == doctest::Approx(1024.0).epsilon(1e-12));
    CHECK(ward_densities(0.0).d2 == doctest::Approx(64.0).epsilon(1e-10));

    // |grad Phi|^2 depends only on r
    std::mt19937_64 rng(11);
    std::normal_distribution<double> dist;
    for (double r : {0.17, 0.9, 2.4, 6.0}) {
        const double ref = ward_densities(r).d2;
        for (int t = 0; t < 5; ++t) {
            Vec3 d{dist(rng), dist(rng), dist(rng)};
            d = d / norm(d);
            double J[3][3];
            ward_jacobian(d * r, J);
            double g2 = 0.0;
            for (int a = 0; a < 3; ++a)
                for (int c = 0; c < 3; ++c) g2 += J[a][c] * J[a][c];
            CHECK(g2 == doctest::Approx(ref).epsilon(1e-10));
        }
        // closed form recovered by differentiation
        const double q = 1.0 + 2.0 * r * r;
        CHECK(ref == doctest::Approx(64.0 / (q * q)).epsilon(1e-10));
    }

    auto radial = [](auto dens) {
        return integrate_to_infinity(
            [&](double r) { return 4.0 * consts::pi * r * r * dens(r); }, 0.0, 1e-13, 1e-13);
    };
    CHECK(radial([](double r) { return ward_densities(r).d2; }) ==
          doctest::Approx(consts::dirichlet_phi).epsilon(1e-10));
    CHECK(radial([](double r) { return ward_densities(r).dcross; }) ==
          doctest::Approx(consts::cross_sum_phi).epsilon(1e-10));
    CHECK(radial([](double r) { return ward_densities(r).d4; }) ==
          doctest::Approx(consts::quartic_phi).epsilon(1e-10));

    // single interior maximum, decreasing beyond it
    double prev = ward_densities(1.0).d2;
    for (double r = 1.1; r < 12.0; r += 0.1) {
        const double cur = ward_densities(r).d2;
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("analytic lift projects onto ward_map and satisfies the gauge identity") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> dist(0.0, 2.0);
    for (int t = 0; t < 2000; ++t) {
        const Vec3 p{dist(rng), dist(rng), dist(rng)};
        const Vec4 lift = ward_lift(p);
        CHECK(std::abs(norm(lift) - 1.0) <= 1e-12);
        CHECK(norm(hopf_map(lift) - ward_map(p)) <= 1e-12);
    }

    // pointwise |grad lift|^2 = (|lift*(2 alpha)|^2 + |grad u|^2) / 4, from
    // complex-step jacobians (exact algebraic identity of the fibration)
    for (int t = 0; t < 300; ++t) {
        const Vec3 p{dist(rng), dist(rng), dist(rng)};
        double Ju[3][3], Jl[3][4];
        ward_jacobian(p, Ju);
        ward_lift_jacobian(p, Jl);
        const Vec4 v = ward_lift(p);
        double g2u = 0.0, g2l = 0.0, z2 = 0.0;
        for (int a = 0; a < 3; ++a) {
            for (int c = 0; c < 3; ++c) g2u += Ju[a][c] * Ju[a][c];
            for (int c = 0; c < 4; ++c) g2l += Jl[a][c] * Jl[a][c];
            const double zk = -2.0 * (v.a * Jl[a][1] - v.b * Jl[a][0] +
                                      v.c * Jl[a][3] - v.d * Jl[a][2]);
            z2 += zk * zk;
        }
        CHECK(g2l == doctest::Approx(0.25 * z2 + 0.25 * g2u).epsilon(1e-10));
    }
}

TEST_CASE("splitting arithmetic excludes every listed decomposition") {
    const auto rows = verify_splitting_impossible();
    REQUIRE(rows.size() >= 3);
    const double budget = consts::faddeev_phi + 0.01;
    CHECK(rows[0].decomposition == "1=1+(-2)");
    CHECK(rows[0].lhs == doctest::Approx(budget));
    CHECK(rows[0].rhs == doctest::Approx(452.1165720654754).epsilon(1e-12));
    for (const auto& r : rows) {
        CHECK(r.excluded);
        CHECK(r.rhs > r.lhs);
        if (r.decomposition != rows[0].decomposition)
            CHECK(r.rhs > rows[0].rhs - 1e-9);
    }
    CHECK(consts::lower_bound_coeff ==
          doctest::Approx(std::pow(3.0, 0.375) * 8.0 * consts::sqrt2 * consts::pi * consts::pi)
              .epsilon(1e-14));
}

TEST_CASE("box reference splits the closed-form totals") {
    for (double hw : {1.5, 2.5, 4.0}) {
        const WardBoxReference ref = ward_box_reference(hw);
        CHECK(ref.dirichlet_box + ref.dirichlet_tail ==
              doctest::Approx(consts::dirichlet_phi).epsilon(1e-10));
        CHECK(ref.cross_half_box + ref.cross_half_tail ==
              doctest::Approx(0.5 * consts::cross_sum_phi).epsilon(1e-10));
        CHECK(ref.quartic_box + ref.quartic_tail ==
              doctest::Approx(consts::quartic_phi).epsilon(1e-10));
        CHECK(ref.dirichlet_box > 0.0);
        CHECK(ref.dirichlet_tail > 0.0);
    }
    CHECK(ward_box_reference(2.0).dirichlet_box < ward_box_reference(3.0).dirichlet_box);
}

TEST_CASE("hedgehog and dipole generators") {
    GridSpec g = GridSpec::centered_box(20, 1.0);

    const DirectionField h = hedgehog(g, Vec3{0.013, -0.021, 0.008}, +1);
    for (std::size_t n = 0; n < g.node_count(); ++n)
        CHECK(std::abs(norm(h.vec3(n)) - 1.0) < 1e-12);

    const DirectionField d = dipole_pair(g, Vec3{0.01, 0.02, 0.25}, Vec3{0.01, 0.02, -0.25});
    for (std::size_t n = 0; n < g.node_count(); ++n)
        CHECK(std::abs(norm(d.vec3(n)) - 1.0) < 1e-12);
    // far field approaches the pair-axis direction (0,0,1)
    CHECK(norm(d.vec3(g.index(0, 0, 0)) - Vec3{0, 0, 1}) < 0.15);

    CHECK_THROWS_AS(dipole_pair(g, Vec3{0, 0, 0}, Vec3{0, 0, 0}), GeometryInvalid);
    CHECK_THROWS_AS(hedgehog(g, Vec3{0, 0, 0}, 2), GeometryInvalid);
}

TEST_CASE("hardt_lin boundary trace") {
    GridSpec g = GridSpec::centered_box(16, 1.0);

    SUBCASE("zero radius degenerates to the constant trace") {
        const DirectionField u = hardt_lin_boundary(g, {0.3, 0.3, -1.0}, {-0.3, -0.3, -1.0}, 0.0);
        for (std::size_t n = 0; n < g.node_count(); ++n)
            CHECK(norm(u.vec3(n) - Vec3{0, 0, 1}) == 0.0);
    }

    SUBCASE("disks carry opposite coverings, rim matches background") {
        const double rad = 0.35;
        const DirectionField u = hardt_lin_boundary(g, {0.4, 0.0, -1.0}, {-0.4, 0.0, -1.0}, rad);
        CHECK(u.boundary_tag == BoundaryTag::dirichlet_trace);
        // disk centers map near the south pole
        int i_p = int(std::lround((0.4 - g.origin.x) / g.spacing));
        const Vec3 at_center = u.vec3(g.index(i_p, g.dims[1] / 2, 0));
        CHECK(at_center.z < -0.8);
        // interior stays at the north pole
        CHECK(norm(u.vec3(g.index(8, 8, 8)) - Vec3{0, 0, 1}) == 0.0);
        for (std::size_t n = 0; n < g.node_count(); ++n)
            CHECK(std::abs(norm(u.vec3(n)) - 1.0) < 1e-12);
    }

    SUBCASE("overlapping disks are rejected") {
        CHECK_THROWS_AS(hardt_lin_boundary(g, {0.1, 0, -1.0}, {-0.1, 0, -1.0}, 0.3),
                        GeometryInvalid);
    }
}
