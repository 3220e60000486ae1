#pragma once

#include <string>
#include <vector>

#include "cdm/dipole.hpp"
#include "cdm/errors.hpp"
#include "cdm/image.hpp"

namespace cdm {

// One channel's moment planes, as stored in a field dump.
struct ChannelPlanes {
    ScalarField px;
    ScalarField py;
    ScalarField magnitude;
};

struct FieldDump {
    int width = 0;
    int height = 0;
    std::vector<ChannelPlanes> channels;
};

// Binary container: magic "CDMF", version, dimensions, then for each channel
// the px, py, magnitude planes as little-endian float64 in row-major order.
void dump_fields(const std::string& path, const FieldDump& dump);
FieldDump load_dump(const std::string& path);

}  // namespace cdm
