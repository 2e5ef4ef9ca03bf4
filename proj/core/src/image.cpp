#include "evit/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "evit/errors.hpp"

namespace evit {

namespace {

std::uint8_t clamp_u8(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

}  // namespace

YuvPlanes rgb_to_yuv(const RgbImage& image) {
  if (image.width <= 0 || image.height <= 0) {
    throw ValidationError("rgb_to_yuv: empty image");
  }
  YuvPlanes out{Plane(image.width, image.height), Plane(image.width, image.height),
                Plane(image.width, image.height)};
  const std::size_t n = static_cast<std::size_t>(image.width) * image.height;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = image.pixels[i * 3 + 0];
    const double g = image.pixels[i * 3 + 1];
    const double b = image.pixels[i * 3 + 2];
    out.y.samples[i] = clamp_u8(0.299 * r + 0.587 * g + 0.114 * b);
    out.u.samples[i] = clamp_u8(-0.168736 * r - 0.331264 * g + 0.5 * b + 128.0);
    out.v.samples[i] = clamp_u8(0.5 * r - 0.418688 * g - 0.081312 * b + 128.0);
  }
  return out;
}

RgbImage yuv_to_rgb(const YuvPlanes& planes) {
  const Plane& y = planes.y;
  if (planes.u.width != y.width || planes.u.height != y.height ||
      planes.v.width != y.width || planes.v.height != y.height) {
    throw ValidationError("yuv_to_rgb: mismatched plane dimensions");
  }
  RgbImage out(y.width, y.height);
  const std::size_t n = static_cast<std::size_t>(y.width) * y.height;
  for (std::size_t i = 0; i < n; ++i) {
    const double yy = y.samples[i];
    const double uu = planes.u.samples[i] - 128.0;
    const double vv = planes.v.samples[i] - 128.0;
    out.pixels[i * 3 + 0] = clamp_u8(yy + 1.402 * vv);
    out.pixels[i * 3 + 1] = clamp_u8(yy - 0.344136 * uu - 0.714136 * vv);
    out.pixels[i * 3 + 2] = clamp_u8(yy + 1.772 * uu);
  }
  return out;
}

Plane pad_to_block_multiple(const Plane& plane) {
  const int pw = (plane.width + 7) / 8 * 8;
  const int ph = (plane.height + 7) / 8 * 8;
  if (pw == plane.width && ph == plane.height) return plane;
  Plane out(pw, ph);
  for (int y = 0; y < ph; ++y) {
    const int sy = std::min(y, plane.height - 1);
    for (int x = 0; x < pw; ++x) {
      const int sx = std::min(x, plane.width - 1);
      out.at(x, y) = plane.at(sx, sy);
    }
  }
  return out;
}

namespace {

RgbImage read_ppm(std::ifstream& in, const std::filesystem::path& path) {
  auto next_token = [&in, &path]() {
    std::string tok;
    while (in >> tok) {
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return tok;
    }
    throw IoError("truncated PPM header: " + path.string());
  };
  const int w = std::stoi(next_token());
  const int h = std::stoi(next_token());
  const int maxval = std::stoi(next_token());
  if (w <= 0 || h <= 0 || maxval != 255) {
    throw IoError("unsupported PPM (need 8-bit P6): " + path.string());
  }
  in.get();  // single whitespace after maxval
  RgbImage img(w, h);
  in.read(reinterpret_cast<char*>(img.pixels.data()),
          static_cast<std::streamsize>(img.pixels.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.pixels.size())) {
    throw IoError("truncated PPM payload: " + path.string());
  }
  return img;
}

RgbImage read_bmp(std::ifstream& in, const std::filesystem::path& path) {
  std::vector<std::uint8_t> header(54);
  in.read(reinterpret_cast<char*>(header.data()), 54);
  if (in.gcount() != 54) throw IoError("truncated BMP header: " + path.string());
  auto u32 = [&header](int off) {
    return static_cast<std::uint32_t>(header[off]) | (header[off + 1] << 8) |
           (header[off + 2] << 16) | (static_cast<std::uint32_t>(header[off + 3]) << 24);
  };
  auto u16 = [&header](int off) { return header[off] | (header[off + 1] << 8); };
  const std::uint32_t data_offset = u32(10);
  const int w = static_cast<std::int32_t>(u32(18));
  const int h = static_cast<std::int32_t>(u32(22));
  if (u16(28) != 24 || u32(30) != 0) {
    throw IoError("unsupported BMP (need 24-bit uncompressed): " + path.string());
  }
  if (w <= 0 || h == 0) throw IoError("bad BMP dimensions: " + path.string());
  const bool bottom_up = h > 0;
  const int ah = std::abs(h);
  in.seekg(data_offset, std::ios::beg);
  const int stride = (w * 3 + 3) / 4 * 4;
  std::vector<std::uint8_t> row(stride);
  RgbImage img(w, ah);
  for (int r = 0; r < ah; ++r) {
    in.read(reinterpret_cast<char*>(row.data()), stride);
    if (in.gcount() != stride) throw IoError("truncated BMP payload: " + path.string());
    const int y = bottom_up ? ah - 1 - r : r;
    for (int x = 0; x < w; ++x) {
      img.at(x, y, 0) = row[x * 3 + 2];
      img.at(x, y, 1) = row[x * 3 + 1];
      img.at(x, y, 2) = row[x * 3 + 0];
    }
  }
  return img;
}

}  // namespace

RgbImage read_pixel_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open image: " + path.string());
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (magic[0] == 'P' && magic[1] == '6') return read_ppm(in, path);
  if (magic[0] == 'B' && magic[1] == 'M') {
    in.seekg(0, std::ios::beg);
    return read_bmp(in, path);
  }
  throw IoError("unsupported image format (need PPM P6 or 24-bit BMP): " + path.string());
}

void write_ppm(const std::filesystem::path& path, const RgbImage& image) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write image: " + path.string());
  out << "P6\n" << image.width << " " << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
  if (!out) throw IoError("short write: " + path.string());
}

}  // namespace evit
