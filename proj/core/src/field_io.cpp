#include "hrx/field_io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace hrx {

namespace {

static_assert(std::endian::native == std::endian::little,
              "SFLD1 payload is little-endian; big-endian hosts need byte swaps");

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_field(const DirectionField& u, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw FormatError("write_field: cannot open " + path);
    std::ostringstream hdr;
    hdr << "SFLD1 " << u.grid.dims[0] << ' ' << u.grid.dims[1] << ' ' << u.grid.dims[2]
        << ' ' << u.components << ' ' << format_double(u.grid.spacing)
        << ' ' << format_double(u.grid.origin.x)
        << ' ' << format_double(u.grid.origin.y)
        << ' ' << format_double(u.grid.origin.z)
        << ' ' << to_string(u.boundary_tag) << '\n';
    const std::string h = hdr.str();
    os.write(h.data(), std::streamsize(h.size()));
    os.write(reinterpret_cast<const char*>(u.values.data()),
             std::streamsize(u.values.size() * sizeof(double)));
    if (!os) throw FormatError("write_field: short write to " + path);
}

DirectionField read_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("read_field: cannot open " + path);
    std::string header;
    if (!std::getline(is, header)) throw FormatError("read_field: missing header line");

    std::istringstream hs(header);
    std::string magic, tag;
    GridSpec g;
    int components = 0;
    hs >> magic >> g.dims[0] >> g.dims[1] >> g.dims[2] >> components >> g.spacing
       >> g.origin.x >> g.origin.y >> g.origin.z >> tag;
    if (!hs || magic != "SFLD1")
        throw FormatError("read_field: bad SFLD1 header in " + path);
    if (components != 3 && components != 4)
        throw FormatError("read_field: components must be 3 or 4");
    if (g.dims[0] < 3 || g.dims[1] < 3 || g.dims[2] < 3 || !(g.spacing > 0.0))
        throw FormatError("read_field: invalid dims/spacing in header");

    DirectionField u(g, components, boundary_tag_from_string(tag));
    const std::size_t bytes = u.values.size() * sizeof(double);
    is.read(reinterpret_cast<char*>(u.values.data()), std::streamsize(bytes));
    if (std::size_t(is.gcount()) != bytes)
        throw FormatError("read_field: payload truncated (" + std::to_string(is.gcount()) +
                          " of " + std::to_string(bytes) + " bytes)");
    char extra;
    if (is.read(&extra, 1))
        throw FormatError("read_field: trailing bytes after payload");

    if (u.boundary_tag == BoundaryTag::far_field_constant) {
        // far-field constant is recoverable from any boundary node
        const double* p = u.node(0);
        for (int c = 0; c < components; ++c) u.far_constant[c] = p[c];
    }
    return u;
}

}  // namespace hrx
