#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tinydet {

/// Row-major interleaved image, samples in [0,1].
struct Raster {
  int width = 0;
  int height = 0;
  int channels = 3;
  std::vector<float> data;  // width * height * channels

  Raster() = default;
  Raster(int w, int h, int c = 3, float fill = 0.f)
      : width(w), height(h), channels(c),
        data(static_cast<std::size_t>(w) * h * c, fill) {}

  float& at(int x, int y, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  float at(int x, int y, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::size_t size() const { return data.size(); }
};

/// Per-channel mean of all samples.
std::array<float, 3> channel_mean(const Raster& img);

/// Binary PPM (P6, 8-bit). Throws data_error on malformed input.
Raster read_ppm(const std::string& path);
void write_ppm(const std::string& path, const Raster& img);

/// Lossless raw dump: u32 width, u32 height, u32 channels (little endian),
/// then row-major 32-bit floats.
Raster read_f32raster(const std::string& path);
void write_f32raster(const std::string& path, const Raster& img);

}  // namespace tinydet
