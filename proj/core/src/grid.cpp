#include "hrx/grid.hpp"

namespace hrx {

void GridSpec::validate() const {
    if (dims[0] < 3 || dims[1] < 3 || dims[2] < 3)
        throw ConfigError("GridSpec: all dims must be >= 3");
    if (!(spacing > 0.0))
        throw ConfigError("GridSpec: spacing must be positive");
}

GridSpec GridSpec::centered_box(int n, double half_width) {
    GridSpec g;
    g.dims = {n, n, n};
    g.spacing = 2.0 * half_width / (n - 1);
    g.origin = {-half_width, -half_width, -half_width};
    g.validate();
    return g;
}

std::string to_string(BoundaryTag tag) {
    switch (tag) {
        case BoundaryTag::dirichlet_trace: return "dirichlet_trace";
        case BoundaryTag::far_field_constant: return "far_field_constant";
        case BoundaryTag::free_boundary: return "free";
    }
    return "free";
}

BoundaryTag boundary_tag_from_string(const std::string& s) {
    if (s == "dirichlet_trace") return BoundaryTag::dirichlet_trace;
    if (s == "far_field_constant") return BoundaryTag::far_field_constant;
    if (s == "free") return BoundaryTag::free_boundary;
    throw FormatError("unknown boundary tag: " + s);
}

DirectionField::DirectionField(const GridSpec& g, int ncomp, BoundaryTag tag)
    : grid(g), components(ncomp), boundary_tag(tag) {
    grid.validate();
    if (ncomp != 3 && ncomp != 4)
        throw ConfigError("DirectionField: components must be 3 or 4");
    values.assign(grid.node_count() * ncomp, 0.0);
}

void DirectionField::fill_constant(const std::array<double, 4>& v) {
    const std::size_t n = grid.node_count();
    for (std::size_t p = 0; p < n; ++p) {
        double* q = node(p);
        for (int c = 0; c < components; ++c) q[c] = v[c];
    }
    far_constant = v;
}

}  // namespace hrx
