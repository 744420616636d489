#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tinydet/raster.hpp"

namespace tinydet {

/// Output dimension for resampling: round half up, clamped to >= 1.
int scaled_dim(int src, double scale);

/// Resample an image. scale > 1 uses bilinear interpolation, scale < 1 a
/// box filter over the scale-aligned source footprint (2x2 mean for 0.5),
/// scale == 1 returns a copy. Filter weights sum to 1, so constants are
/// preserved and outputs stay in [0,1].
Raster resample(const Raster& img, double scale);

struct Pyramid {
  struct Level {
    double scale;
    Raster image;
  };
  std::vector<Level> levels;  // ascending scale
  int source_width = 0;
  int source_height = 0;

  const Level* find(double scale) const;
};

/// One resampled level per requested scale.
Pyramid build_pyramid(const Raster& img, std::span<const double> scales);

/// A size x size window at (x, y), with out-of-bounds samples filled by the
/// per-channel mean. `valid` marks real (non-filled) pixels, one byte per
/// pixel, for the border masking done at training time.
struct PaddedCrop {
  Raster image;
  std::vector<std::uint8_t> valid;  // size * size
  int x = 0, y = 0;

  bool is_valid(int cx, int cy) const {
    return valid[static_cast<std::size_t>(cy) * image.width + cx] != 0;
  }
};

PaddedCrop pad_crop(const Raster& img, int x, int y, int size,
                    const std::array<float, 3>& fill);

}  // namespace tinydet
