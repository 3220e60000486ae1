#include "cdm/dump.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>

namespace cdm {

namespace {

constexpr std::array<char, 4> kMagic{'C', 'D', 'M', 'F'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_f64(std::string& out, double v) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    for (int shift = 0; shift < 64; shift += 8) {
        out.push_back(static_cast<char>((bits >> shift) & 0xff));
    }
}

class Reader {
  public:
    explicit Reader(std::string data) : data_(std::move(data)) {}

    std::uint32_t get_u32() {
        require(4);
        std::uint32_t v = 0;
        for (int shift = 0; shift < 32; shift += 8) {
            v |= std::uint32_t(static_cast<unsigned char>(data_[pos_++])) << shift;
        }
        return v;
    }

    double get_f64() {
        require(8);
        std::uint64_t bits = 0;
        for (int shift = 0; shift < 64; shift += 8) {
            bits |= std::uint64_t(static_cast<unsigned char>(data_[pos_++])) << shift;
        }
        return std::bit_cast<double>(bits);
    }

    void get_magic() {
        require(4);
        if (std::memcmp(data_.data() + pos_, kMagic.data(), 4) != 0) {
            throw CorruptDump("bad field-dump magic");
        }
        pos_ += 4;
    }

    bool exhausted() const { return pos_ == data_.size(); }

  private:
    void require(std::size_t n) {
        if (data_.size() - pos_ < n) throw CorruptDump("truncated field dump");
    }

    std::string data_;
    std::size_t pos_ = 0;
};

void put_plane(std::string& out, const ScalarField& plane, int width, int height) {
    if (static_cast<int>(plane.rows()) != height || static_cast<int>(plane.cols()) != width) {
        throw InvalidArgument("field-dump plane dimensions disagree with header");
    }
    for (int i = 0; i < height; ++i) {
        for (int j = 0; j < width; ++j) {
            put_f64(out, plane(i, j));
        }
    }
}

ScalarField get_plane(Reader& reader, int width, int height) {
    ScalarField plane(height, width);
    for (int i = 0; i < height; ++i) {
        for (int j = 0; j < width; ++j) {
            plane(i, j) = reader.get_f64();
        }
    }
    return plane;
}

}  // namespace

void dump_fields(const std::string& path, const FieldDump& dump) {
    if (dump.width <= 0 || dump.height <= 0) {
        throw InvalidArgument("field dump requires positive dimensions");
    }
    if (dump.channels.empty()) {
        throw InvalidArgument("field dump requires at least one channel");
    }
    std::string payload;
    payload.reserve(20 + dump.channels.size() * 3 *
                             std::size_t(dump.width) * std::size_t(dump.height) * 8);
    payload.append(kMagic.data(), kMagic.size());
    put_u32(payload, kVersion);
    put_u32(payload, static_cast<std::uint32_t>(dump.width));
    put_u32(payload, static_cast<std::uint32_t>(dump.height));
    put_u32(payload, static_cast<std::uint32_t>(dump.channels.size()));
    for (const ChannelPlanes& ch : dump.channels) {
        put_plane(payload, ch.px, dump.width, dump.height);
        put_plane(payload, ch.py, dump.width, dump.height);
        put_plane(payload, ch.magnitude, dump.width, dump.height);
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw IoError("write failed: " + path);
}

FieldDump load_dump(const std::string& path) {
    if (!std::filesystem::exists(path)) {
        throw FileNotFound("no such file: " + path);
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (!in.good() && !in.eof()) throw IoError("read failed: " + path);

    Reader reader(std::move(data));
    reader.get_magic();
    std::uint32_t version = reader.get_u32();
    if (version != kVersion) {
        throw CorruptDump("unsupported field-dump version " + std::to_string(version));
    }
    std::uint32_t width = reader.get_u32();
    std::uint32_t height = reader.get_u32();
    std::uint32_t channel_count = reader.get_u32();
    if (width == 0 || height == 0 || width > (1u << 24) || height > (1u << 24)) {
        throw CorruptDump("implausible field-dump dimensions");
    }
    if (channel_count == 0 || channel_count > 4) {
        throw CorruptDump("implausible field-dump channel count");
    }

    FieldDump dump;
    dump.width = static_cast<int>(width);
    dump.height = static_cast<int>(height);
    dump.channels.reserve(channel_count);
    for (std::uint32_t c = 0; c < channel_count; ++c) {
        ChannelPlanes planes;
        planes.px = get_plane(reader, dump.width, dump.height);
        planes.py = get_plane(reader, dump.width, dump.height);
        planes.magnitude = get_plane(reader, dump.width, dump.height);
        dump.channels.push_back(std::move(planes));
    }
    if (!reader.exhausted()) throw CorruptDump("trailing bytes after field dump payload");
    return dump;
}

}  // namespace cdm
