#pragma once

#include <array>
#include <cstdint>

namespace evit::jpeg {

// kZigZagToRaster[i] = raster index of the i-th element in zig-zag order.
extern const std::array<int, 64> kZigZagToRaster;
// kRasterToZigZag[r] = zig-zag position of raster index r.
extern const std::array<int, 64> kRasterToZigZag;

template <typename T>
void zigzag_forward(const T* raster, T* zz) {
  for (int i = 0; i < 64; ++i) zz[i] = raster[kZigZagToRaster[i]];
}

template <typename T>
void zigzag_inverse(const T* zz, T* raster) {
  for (int i = 0; i < 64; ++i) raster[kZigZagToRaster[i]] = zz[i];
}

}  // namespace evit::jpeg
