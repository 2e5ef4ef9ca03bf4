#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace evit {

// 8-bit RGB image, row-major, interleaved triples.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, 0) {}

  std::uint8_t& at(int x, int y, int c) {
    return pixels[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  std::uint8_t at(int x, int y, int c) const {
    return pixels[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  bool same_size(const RgbImage& o) const { return width == o.width && height == o.height; }
};

// Single 8-bit sample plane.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> samples;

  Plane() = default;
  Plane(int w, int h) : width(w), height(h), samples(static_cast<std::size_t>(w) * h, 0) {}

  std::uint8_t& at(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }
};

// Full-resolution (4:4:4) YUV planes. All three have identical dimensions.
struct YuvPlanes {
  Plane y, u, v;
};

// BT.601 full-range conversion, rounded and clamped to [0,255].
YuvPlanes rgb_to_yuv(const RgbImage& image);
RgbImage yuv_to_rgb(const YuvPlanes& planes);

// Replicates the right/bottom edge until both dimensions are multiples of 8.
Plane pad_to_block_multiple(const Plane& plane);

// Pixel file IO. Supported: binary PPM (P6) and uncompressed 24-bit BMP.
RgbImage read_pixel_image(const std::filesystem::path& path);
void write_ppm(const std::filesystem::path& path, const RgbImage& image);

}  // namespace evit
