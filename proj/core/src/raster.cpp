#include "tinydet/raster.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "tinydet/errors.hpp"

namespace tinydet {

namespace {

static_assert(std::endian::native == std::endian::little,
              "raster binary formats assume a little-endian host");

int read_pnm_token(std::istream& in, const std::string& path) {
  // Skips whitespace and '#' comments per the PNM grammar.
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (!std::isspace(c)) {
      break;
    }
    c = in.get();
  }
  if (c == EOF) throw data_error(path + ": truncated PPM header");
  int value = 0;
  bool any = false;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    any = true;
    c = in.get();
  }
  if (!any) throw data_error(path + ": malformed PPM header token");
  return value;
}

}  // namespace

std::array<float, 3> channel_mean(const Raster& img) {
  std::array<double, 3> acc{0, 0, 0};
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
  if (n == 0) return {0.f, 0.f, 0.f};
  for (std::size_t i = 0; i < n; ++i)
    for (int c = 0; c < img.channels; ++c) acc[c] += img.data[i * img.channels + c];
  std::array<float, 3> mean{};
  for (int c = 0; c < img.channels; ++c) mean[c] = static_cast<float>(acc[c] / double(n));
  return mean;
}

Raster read_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error(path + ": cannot open");
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (magic[0] != 'P' || magic[1] != '6') throw data_error(path + ": not a P6 PPM");
  const int w = read_pnm_token(in, path);
  const int h = read_pnm_token(in, path);
  const int maxval = read_pnm_token(in, path);
  if (w <= 0 || h <= 0) throw data_error(path + ": non-positive PPM dimensions");
  if (maxval != 255) throw data_error(path + ": only 8-bit PPM supported");
  // The header token reader consumed the single whitespace after maxval.
  std::vector<unsigned char> bytes(static_cast<std::size_t>(w) * h * 3);
  in.read(reinterpret_cast<char*>(bytes.data()), std::streamsize(bytes.size()));
  if (static_cast<std::size_t>(in.gcount()) != bytes.size())
    throw data_error(path + ": truncated PPM pixel data");
  Raster img(w, h, 3);
  for (std::size_t i = 0; i < bytes.size(); ++i)
    img.data[i] = static_cast<float>(bytes[i]) / 255.0f;
  return img;
}

void write_ppm(const std::string& path, const Raster& img) {
  if (img.channels != 3) throw data_error(path + ": PPM writer needs 3 channels");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error(path + ": cannot open for writing");
  char header[64];
  const int n = std::snprintf(header, sizeof header, "P6\n%d %d\n255\n", img.width, img.height);
  out.write(header, n);
  std::vector<unsigned char> bytes(img.data.size());
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    const float v = img.data[i];
    const int q = static_cast<int>(std::lround(v * 255.0f));
    bytes[i] = static_cast<unsigned char>(std::min(255, std::max(0, q)));
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
  if (!out) throw data_error(path + ": write failed");
}

Raster read_f32raster(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error(path + ": cannot open");
  std::uint32_t dims[3];
  in.read(reinterpret_cast<char*>(dims), sizeof dims);
  if (!in) throw data_error(path + ": truncated f32raster header");
  if (dims[0] == 0 || dims[1] == 0 || dims[2] == 0 || dims[2] > 16)
    throw data_error(path + ": implausible f32raster dimensions");
  Raster img(int(dims[0]), int(dims[1]), int(dims[2]));
  in.read(reinterpret_cast<char*>(img.data.data()),
          std::streamsize(img.data.size() * sizeof(float)));
  if (static_cast<std::size_t>(in.gcount()) != img.data.size() * sizeof(float))
    throw data_error(path + ": truncated f32raster data");
  return img;
}

void write_f32raster(const std::string& path, const Raster& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error(path + ": cannot open for writing");
  const std::uint32_t dims[3] = {std::uint32_t(img.width), std::uint32_t(img.height),
                                 std::uint32_t(img.channels)};
  out.write(reinterpret_cast<const char*>(dims), sizeof dims);
  out.write(reinterpret_cast<const char*>(img.data.data()),
            std::streamsize(img.data.size() * sizeof(float)));
  if (!out) throw data_error(path + ": write failed");
}

}  // namespace tinydet
