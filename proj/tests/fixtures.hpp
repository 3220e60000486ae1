#pragma once

#include <unistd.h>

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "cdm/image.hpp"

namespace cdmtest {

inline cdm::ScalarField random_u8_field(int h, int w, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    cdm::ScalarField f(h, w);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) f(i, j) = dist(rng);
    }
    return f;
}

inline cdm::Bitmap random_bitmap(int w, int h, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    cdm::Bitmap b(w, h);
    for (auto& s : b.samples) s = static_cast<std::uint8_t>(dist(rng));
    return b;
}

inline cdm::GrayBitmap random_gray_bitmap(int w, int h, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    cdm::GrayBitmap g(w, h);
    for (auto& s : g.samples) s = static_cast<std::uint8_t>(dist(rng));
    return g;
}

/// Columns past the midpoint take the high value.
inline cdm::ScalarField vertical_step(int h, int w, double lo = 0.0, double hi = 255.0) {
    cdm::ScalarField f(h, w);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) f(i, j) = j >= w / 2 ? hi : lo;
    }
    return f;
}

/// Rows past the midpoint take the high value.
inline cdm::ScalarField horizontal_step(int h, int w, double lo = 0.0, double hi = 255.0) {
    cdm::ScalarField f(h, w);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) f(i, j) = i >= h / 2 ? hi : lo;
    }
    return f;
}

inline cdm::ScalarField checkerboard(int h, int w, double a, double b) {
    cdm::ScalarField f(h, w);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) f(i, j) = (i + j) % 2 == 0 ? a : b;
    }
    return f;
}

/// Unique directory under the system temp root, removed on destruction.
class TempDir {
  public:
    TempDir() {
        static std::atomic<std::uint64_t> counter{0};
        auto base = std::filesystem::temp_directory_path();
        path_ = base / ("cdm_test_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }
    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
};

}  // namespace cdmtest
