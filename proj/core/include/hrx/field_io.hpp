#pragma once

#include <string>

#include "hrx/grid.hpp"

namespace hrx {

/// SFLD1 container: one text header line
///   SFLD1 nx ny nz components spacing ox oy oz boundary_tag\n
/// followed by little-endian float64 payload, x-fastest, components
/// interleaved per node. Round-trips bit-exactly.
void write_field(const DirectionField& u, const std::string& path);
DirectionField read_field(const std::string& path);

}  // namespace hrx
