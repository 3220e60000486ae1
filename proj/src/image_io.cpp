#include "cdm/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include <png.h>

namespace cdm {

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
        throw FileNotFound("no such file: " + path);
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open for reading: " + path);
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("read failed: " + path);
    }
    return bytes;
}

void write_file(const std::string& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    out.flush();
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

// ---------------------------------------------------------------------------
// PNM (P6 / P5)
// ---------------------------------------------------------------------------

struct PnmCursor {
    const std::vector<std::uint8_t>& bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    std::uint8_t peek() const { return bytes[pos]; }
};

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Whitespace between header tokens; '#' starts a comment running to end of line.
void skip_header_space(PnmCursor& cur) {
    while (!cur.eof()) {
        if (is_pnm_space(cur.peek())) {
            ++cur.pos;
        } else if (cur.peek() == '#') {
            while (!cur.eof() && cur.peek() != '\n') ++cur.pos;
        } else {
            break;
        }
    }
}

long parse_header_int(PnmCursor& cur, const char* what) {
    skip_header_space(cur);
    if (cur.eof() || !std::isdigit(cur.peek())) {
        throw CorruptImage(std::string("PNM header: expected ") + what);
    }
    long value = 0;
    while (!cur.eof() && std::isdigit(cur.peek())) {
        value = value * 10 + (cur.peek() - '0');
        if (value > 1000000000L) {
            throw CorruptImage(std::string("PNM header: implausible ") + what);
        }
        ++cur.pos;
    }
    return value;
}

Bitmap load_pnm(const std::vector<std::uint8_t>& bytes, bool color) {
    PnmCursor cur{bytes, 2};  // past the magic
    long w = parse_header_int(cur, "width");
    long h = parse_header_int(cur, "height");
    long maxval = parse_header_int(cur, "maxval");
    if (w < 1 || h < 1) {
        throw CorruptImage("PNM header: zero dimension");
    }
    if (maxval != 255) {
        throw UnsupportedFormat("PNM maxval must be 255, got " + std::to_string(maxval));
    }
    if (cur.eof() || !is_pnm_space(cur.peek())) {
        throw CorruptImage("PNM header: missing whitespace before payload");
    }
    ++cur.pos;  // exactly one whitespace byte separates header from payload

    std::size_t expected = static_cast<std::size_t>(w) * h * (color ? 3 : 1);
    std::size_t available = bytes.size() - cur.pos;
    if (available < expected) {
        throw CorruptImage("PNM payload truncated: expected " + std::to_string(expected) +
                           " bytes, got " + std::to_string(available));
    }
    if (available > expected) {
        throw CorruptImage("PNM payload has trailing bytes");
    }

    if (color) {
        Bitmap bitmap(static_cast<int>(w), static_cast<int>(h));
        std::copy_n(bytes.begin() + cur.pos, expected, bitmap.samples.begin());
        return bitmap;
    }
    GrayBitmap gray(static_cast<int>(w), static_cast<int>(h));
    std::copy_n(bytes.begin() + cur.pos, expected, gray.samples.begin());
    return promote_gray(gray);
}

std::string pnm_header(const char* magic, int w, int h) {
    return std::string(magic) + "\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
}

// ---------------------------------------------------------------------------
// PNG
// ---------------------------------------------------------------------------

struct PngMessage {
    std::string text;
};

[[noreturn]] void on_png_error(png_structp png, png_const_charp msg) {
    auto* state = static_cast<PngMessage*>(png_get_error_ptr(png));
    if (state) state->text = msg ? msg : "unknown";
    longjmp(png_jmpbuf(png), 1);
}

void on_png_warning(png_structp, png_const_charp) {}

struct MemReader {
    const std::uint8_t* data;
    std::size_t size;
    std::size_t pos;
};

void mem_read_fn(png_structp png, png_bytep out, png_size_t len) {
    auto* reader = static_cast<MemReader*>(png_get_io_ptr(png));
    if (reader->pos + len > reader->size) {
        png_error(png, "unexpected end of PNG stream");
    }
    std::copy_n(reader->data + reader->pos, len, out);
    reader->pos += len;
}

void mem_write_fn(png_structp png, png_bytep data, png_size_t len) {
    auto* sink = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
    sink->insert(sink->end(), data, data + len);
}

void mem_flush_fn(png_structp) {}

struct PngReadGuard {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReadGuard() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct PngWriteGuard {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriteGuard() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

Bitmap load_png(const std::vector<std::uint8_t>& bytes) {
    PngMessage message;
    PngReadGuard guard;
    guard.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &message, on_png_error,
                                       on_png_warning);
    if (!guard.png) throw CorruptImage("PNG: failed to initialize decoder");
    guard.info = png_create_info_struct(guard.png);
    if (!guard.info) throw CorruptImage("PNG: failed to initialize decoder");

    Bitmap bitmap;
    std::vector<png_bytep> rows;
    MemReader reader{bytes.data(), bytes.size(), 0};

    if (setjmp(png_jmpbuf(guard.png))) {
        throw CorruptImage("PNG decode failed: " + message.text);
    }

    png_set_read_fn(guard.png, &reader, mem_read_fn);
    png_read_info(guard.png, guard.info);

    png_uint_32 w = png_get_image_width(guard.png, guard.info);
    png_uint_32 h = png_get_image_height(guard.png, guard.info);
    int bit_depth = png_get_bit_depth(guard.png, guard.info);
    int color_type = png_get_color_type(guard.png, guard.info);

    if (bit_depth == 16) {
        throw UnsupportedFormat("16-bit PNG is not supported");
    }
    if (w < 1 || h < 1 || w > 1000000000U || h > 1000000000U) {
        throw CorruptImage("PNG: implausible dimensions");
    }

    if (color_type == PNG_COLOR_TYPE_PALETTE) {
        png_set_palette_to_rgb(guard.png);
    }
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
        png_set_expand_gray_1_2_4_to_8(guard.png);
    }
    if (png_get_valid(guard.png, guard.info, PNG_INFO_tRNS)) {
        png_set_tRNS_to_alpha(guard.png);
    }
    png_set_strip_alpha(guard.png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
        png_set_gray_to_rgb(guard.png);
    }
    png_read_update_info(guard.png, guard.info);

    if (png_get_rowbytes(guard.png, guard.info) != static_cast<std::size_t>(w) * 3) {
        throw CorruptImage("PNG: unexpected row layout after decode");
    }

    bitmap = Bitmap(static_cast<int>(w), static_cast<int>(h));
    rows.resize(h);
    for (png_uint_32 i = 0; i < h; ++i) {
        rows[i] = bitmap.samples.data() + static_cast<std::size_t>(i) * w * 3;
    }
    png_read_image(guard.png, rows.data());
    png_read_end(guard.png, nullptr);
    return bitmap;
}

std::vector<std::uint8_t> encode_png(const std::uint8_t* samples, int width, int height,
                                     int channels) {
    PngMessage message;
    PngWriteGuard guard;
    guard.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &message, on_png_error,
                                        on_png_warning);
    if (!guard.png) throw IoError("PNG: failed to initialize encoder");
    guard.info = png_create_info_struct(guard.png);
    if (!guard.info) throw IoError("PNG: failed to initialize encoder");

    std::vector<std::uint8_t> sink;
    std::vector<png_const_bytep> rows(height);
    for (int i = 0; i < height; ++i) {
        rows[i] = samples + static_cast<std::size_t>(i) * width * channels;
    }

    if (setjmp(png_jmpbuf(guard.png))) {
        throw IoError("PNG encode failed: " + message.text);
    }

    png_set_write_fn(guard.png, &sink, mem_write_fn, mem_flush_fn);
    png_set_IHDR(guard.png, guard.info, static_cast<png_uint_32>(width),
                 static_cast<png_uint_32>(height), 8,
                 channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(guard.png, guard.info);
    png_write_rows(guard.png, const_cast<png_bytepp>(rows.data()),
                   static_cast<png_uint_32>(height));
    png_write_end(guard.png, guard.info);
    return sink;
}

}  // namespace

Bitmap load_image(const std::string& path) {
    std::vector<std::uint8_t> bytes = read_file(path);
    static const std::uint8_t png_sig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
    if (bytes.size() >= 8 && std::equal(png_sig, png_sig + 8, bytes.begin())) {
        return load_png(bytes);
    }
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') {
        return load_pnm(bytes, true);
    }
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') {
        return load_pnm(bytes, false);
    }
    throw UnsupportedFormat("unknown image magic in " + path);
}

void save_image(const Bitmap& bitmap, const std::string& path, ImageFormat format) {
    if (!bitmap.valid()) {
        throw InvalidArgument("save_image: invalid bitmap");
    }
    switch (format) {
        case ImageFormat::Ppm: {
            std::string header = pnm_header("P6", bitmap.width, bitmap.height);
            std::vector<std::uint8_t> out(header.begin(), header.end());
            out.insert(out.end(), bitmap.samples.begin(), bitmap.samples.end());
            write_file(path, out.data(), out.size());
            return;
        }
        case ImageFormat::Png: {
            std::vector<std::uint8_t> out =
                encode_png(bitmap.samples.data(), bitmap.width, bitmap.height, 3);
            write_file(path, out.data(), out.size());
            return;
        }
        case ImageFormat::Pgm:
            throw InvalidArgument("save_image: PGM cannot hold a color bitmap");
    }
    throw InvalidArgument("save_image: unknown format");
}

void save_gray_image(const GrayBitmap& gray, const std::string& path, ImageFormat format) {
    if (!gray.valid()) {
        throw InvalidArgument("save_gray_image: invalid bitmap");
    }
    switch (format) {
        case ImageFormat::Pgm: {
            std::string header = pnm_header("P5", gray.width, gray.height);
            std::vector<std::uint8_t> out(header.begin(), header.end());
            out.insert(out.end(), gray.samples.begin(), gray.samples.end());
            write_file(path, out.data(), out.size());
            return;
        }
        case ImageFormat::Png: {
            std::vector<std::uint8_t> out =
                encode_png(gray.samples.data(), gray.width, gray.height, 1);
            write_file(path, out.data(), out.size());
            return;
        }
        case ImageFormat::Ppm:
            save_image(promote_gray(gray), path, ImageFormat::Ppm);
            return;
    }
    throw InvalidArgument("save_gray_image: unknown format");
}

ImageFormat format_from_extension(const std::string& path) {
    std::string ext = std::filesystem::path(path).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".png") return ImageFormat::Png;
    if (ext == ".ppm") return ImageFormat::Ppm;
    if (ext == ".pgm") return ImageFormat::Pgm;
    throw UnsupportedFormat("unsupported output extension: '" + ext + "' in " + path);
}

}  // namespace cdm
