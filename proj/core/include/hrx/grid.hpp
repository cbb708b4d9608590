#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hrx/errors.hpp"
#include "hrx/types.hpp"

namespace hrx {

/// Axis-aligned uniform lattice. Node (i,j,k) sits at origin + h*(i,j,k);
/// linear index is x-fastest.
struct GridSpec {
    std::array<int, 3> dims{0, 0, 0};
    double spacing = 0.0;
    Vec3 origin{0.0, 0.0, 0.0};

    std::size_t node_count() const {
        return std::size_t(dims[0]) * dims[1] * dims[2];
    }
    std::size_t index(int i, int j, int k) const {
        return std::size_t(k) * dims[1] * dims[0] + std::size_t(j) * dims[0] + i;
    }
    Vec3 position(int i, int j, int k) const {
        return {origin.x + spacing * i, origin.y + spacing * j, origin.z + spacing * k};
    }
    /// Physical extent per axis, (dims-1)*spacing.
    Vec3 extent() const {
        return {spacing * (dims[0] - 1), spacing * (dims[1] - 1), spacing * (dims[2] - 1)};
    }
    Vec3 center() const { return origin + extent() * 0.5; }
    bool on_boundary(int i, int j, int k) const {
        return i == 0 || j == 0 || k == 0 ||
               i == dims[0] - 1 || j == dims[1] - 1 || k == dims[2] - 1;
    }
    bool operator==(const GridSpec& o) const {
        return dims == o.dims && spacing == o.spacing &&
               origin.x == o.origin.x && origin.y == o.origin.y && origin.z == o.origin.z;
    }

    void validate() const;

    /// Cube [-half_width, half_width]^3 sampled with n nodes per axis.
    static GridSpec centered_box(int n, double half_width);
};

enum class BoundaryTag : std::uint8_t { dirichlet_trace, far_field_constant, free_boundary };

std::string to_string(BoundaryTag tag);
BoundaryTag boundary_tag_from_string(const std::string& s);

/// Unit-vector field on a lattice; components is 3 (S^2 target) or 4 (S^3).
struct DirectionField {
    GridSpec grid;
    int components = 3;
    BoundaryTag boundary_tag = BoundaryTag::free_boundary;
    std::vector<double> values;  // node-major, components interleaved
    std::array<double, 4> far_constant{0.0, 0.0, 0.0, 0.0};

    DirectionField() = default;
    DirectionField(const GridSpec& g, int ncomp, BoundaryTag tag = BoundaryTag::free_boundary);

    double* node(std::size_t n) { return values.data() + n * components; }
    const double* node(std::size_t n) const { return values.data() + n * components; }

    Vec3 vec3(std::size_t n) const {
        const double* p = node(n);
        return {p[0], p[1], p[2]};
    }
    Vec4 vec4(std::size_t n) const {
        const double* p = node(n);
        return {p[0], p[1], p[2], p[3]};
    }
    void set(std::size_t n, const Vec3& v) {
        double* p = node(n);
        p[0] = v.x; p[1] = v.y; p[2] = v.z;
    }
    void set(std::size_t n, const Vec4& v) {
        double* p = node(n);
        p[0] = v.a; p[1] = v.b; p[2] = v.c; p[3] = v.d;
    }

    /// Fill every node with one value and record it as the far-field constant.
    void fill_constant(const std::array<double, 4>& v);
};

struct VectorField3 {
    GridSpec grid;
    std::vector<double> values;  // 3 per node

    VectorField3() = default;
    explicit VectorField3(const GridSpec& g) : grid(g), values(g.node_count() * 3, 0.0) {}

    Vec3 at(std::size_t n) const {
        const double* p = values.data() + n * 3;
        return {p[0], p[1], p[2]};
    }
    void set(std::size_t n, const Vec3& v) {
        double* p = values.data() + n * 3;
        p[0] = v.x; p[1] = v.y; p[2] = v.z;
    }
};

struct ScalarField {
    GridSpec grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const GridSpec& g) : grid(g), values(g.node_count(), 0.0) {}

    double& operator[](std::size_t n) { return values[n]; }
    double operator[](std::size_t n) const { return values[n]; }
};

/// Per-node matrix of partials d_k u_c, k = 0..2, c = 0..components-1.
/// Central differences in the interior, first-order one-sided on faces.
struct JacobianField {
    GridSpec grid;
    int components = 3;
    std::vector<double> values;  // node-major, 3*components per node

    JacobianField() = default;
    JacobianField(const GridSpec& g, int ncomp)
        : grid(g), components(ncomp), values(g.node_count() * 3 * ncomp, 0.0) {}

    double* node(std::size_t n) { return values.data() + n * 3 * components; }
    const double* node(std::size_t n) const { return values.data() + n * 3 * components; }

    /// Partial along axis k as a Vec3 (components == 3 only).
    Vec3 partial3(std::size_t n, int k) const {
        const double* p = node(n) + k * components;
        return {p[0], p[1], p[2]};
    }
};

}  // namespace hrx
