#include <doctest.h>

#include <cstdint>
#include <fstream>
#include <vector>

#include "cdm/dump.hpp"
#include "fixtures.hpp"

using namespace cdm;
using cdmtest::TempDir;

namespace {

ScalarField random_real_field(int h, int w, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1e6, 1e6);
    ScalarField f(h, w);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) f(i, j) = dist(rng);
    }
    return f;
}

FieldDump sample_dump(int w, int h, int channels, std::uint32_t seed) {
    FieldDump dump;
    dump.width = w;
    dump.height = h;
    for (int c = 0; c < channels; ++c) {
        ChannelPlanes planes;
        planes.px = random_real_field(h, w, seed + 3 * c);
        planes.py = random_real_field(h, w, seed + 3 * c + 1);
        planes.magnitude = random_real_field(h, w, seed + 3 * c + 2);
        dump.channels.push_back(std::move(planes));
    }
    return dump;
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST_CASE("write then read reproduces every plane bitwise") {
    TempDir dir;
    std::string path = dir.file("fields.cdmf");
    FieldDump original = sample_dump(7, 5, 3, 60u);
    dump_fields(path, original);
    FieldDump loaded = load_dump(path);

    REQUIRE(loaded.width == 7);
    REQUIRE(loaded.height == 5);
    REQUIRE(loaded.channels.size() == 3);
    for (int c = 0; c < 3; ++c) {
        CHECK((loaded.channels[c].px == original.channels[c].px).all());
        CHECK((loaded.channels[c].py == original.channels[c].py).all());
        CHECK((loaded.channels[c].magnitude == original.channels[c].magnitude).all());
    }
}

TEST_CASE("single-channel dumps round trip too") {
    TempDir dir;
    std::string path = dir.file("gray.cdmf");
    FieldDump original = sample_dump(3, 9, 1, 61u);
    dump_fields(path, original);
    FieldDump loaded = load_dump(path);
    REQUIRE(loaded.channels.size() == 1);
    CHECK((loaded.channels[0].px == original.channels[0].px).all());
}

TEST_CASE("the header layout is pinned") {
    TempDir dir;
    std::string path = dir.file("hdr.cdmf");
    dump_fields(path, sample_dump(2, 3, 1, 62u));
    std::vector<std::uint8_t> bytes = read_bytes(path);
    REQUIRE(bytes.size() == 20 + 3u * 2 * 3 * 8);
    CHECK(bytes[0] == 'C');
    CHECK(bytes[1] == 'D');
    CHECK(bytes[2] == 'M');
    CHECK(bytes[3] == 'F');
    // little-endian u32s: version 1, width 2, height 3, channels 1
    CHECK(bytes[4] == 1);
    CHECK(bytes[5] == 0);
    CHECK(bytes[8] == 2);
    CHECK(bytes[12] == 3);
    CHECK(bytes[16] == 1);
}

TEST_CASE("exact double payloads survive, including non-finite-free extremes") {
    TempDir dir;
    std::string path = dir.file("extreme.cdmf");
    FieldDump dump;
    dump.width = 2;
    dump.height = 1;
    ChannelPlanes planes;
    planes.px.resize(1, 2);
    planes.px << 0.1, -1e300;
    planes.py.resize(1, 2);
    planes.py << 5e-324, 0.0;  // denormal minimum and signed zero
    planes.magnitude.resize(1, 2);
    planes.magnitude << 1.0 / 3.0, 255.0;
    dump.channels.push_back(planes);
    dump_fields(path, dump);
    FieldDump loaded = load_dump(path);
    CHECK(loaded.channels[0].px(0, 0) == 0.1);
    CHECK(loaded.channels[0].px(0, 1) == -1e300);
    CHECK(loaded.channels[0].py(0, 0) == 5e-324);
    CHECK(loaded.channels[0].magnitude(0, 0) == 1.0 / 3.0);
}

TEST_CASE("zero-sized dumps are rejected at write") {
    TempDir dir;
    FieldDump dump;  // width = height = 0
    CHECK_THROWS_AS(dump_fields(dir.file("bad.cdmf"), dump), InvalidArgument);

    FieldDump sized = sample_dump(2, 2, 1, 63u);
    sized.channels.clear();
    CHECK_THROWS_AS(dump_fields(dir.file("bad2.cdmf"), sized), InvalidArgument);
}

TEST_CASE("plane dimension mismatches are rejected at write") {
    TempDir dir;
    FieldDump dump = sample_dump(4, 4, 1, 64u);
    dump.width = 5;  // header no longer matches the planes
    CHECK_THROWS_AS(dump_fields(dir.file("bad3.cdmf"), dump), InvalidArgument);
}

TEST_CASE("bad magic is corrupt") {
    TempDir dir;
    std::string path = dir.file("magic.cdmf");
    dump_fields(path, sample_dump(2, 2, 1, 65u));
    auto bytes = read_bytes(path);
    bytes[0] = 'X';
    write_bytes(path, bytes);
    CHECK_THROWS_AS(load_dump(path), CorruptDump);
}

TEST_CASE("unknown version is corrupt") {
    TempDir dir;
    std::string path = dir.file("version.cdmf");
    dump_fields(path, sample_dump(2, 2, 1, 66u));
    auto bytes = read_bytes(path);
    bytes[4] = 9;
    write_bytes(path, bytes);
    CHECK_THROWS_AS(load_dump(path), CorruptDump);
}

TEST_CASE("truncated and padded payloads are corrupt") {
    TempDir dir;
    std::string path = dir.file("trunc.cdmf");
    dump_fields(path, sample_dump(3, 3, 2, 67u));
    auto bytes = read_bytes(path);

    auto shorter = std::vector<std::uint8_t>(bytes.begin(), bytes.end() - 9);
    write_bytes(path, shorter);
    CHECK_THROWS_AS(load_dump(path), CorruptDump);

    auto longer = bytes;
    longer.push_back(0);
    write_bytes(path, longer);
    CHECK_THROWS_AS(load_dump(path), CorruptDump);
}

TEST_CASE("implausible headers are corrupt") {
    TempDir dir;
    std::string path = dir.file("huge.cdmf");
    dump_fields(path, sample_dump(2, 2, 1, 68u));
    auto bytes = read_bytes(path);
    bytes[16] = 200;  // claim 200 channels
    write_bytes(path, bytes);
    CHECK_THROWS_AS(load_dump(path), CorruptDump);
}

TEST_CASE("missing dump file reports FileNotFound") {
    CHECK_THROWS_AS(load_dump("/nonexistent/fields.cdmf"), FileNotFound);
}

TEST_CASE("unwritable dump path reports IoError") {
    CHECK_THROWS_AS(dump_fields("/nonexistent/dir/fields.cdmf", sample_dump(2, 2, 1, 69u)),
                    IoError);
}
