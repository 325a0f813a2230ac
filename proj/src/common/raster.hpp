#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "common/errors.hpp"

namespace cyclemix {

// A single image in channel-major (CHW) float32 layout, values in [0, 1]
// throughout the pipeline (the GAN internals remap to [-1, 1] at their own
// boundary). Canonical images - loader outputs, synthetic renders, translator
// outputs - are additionally aligned to the 8-bit grid (every value is k/255),
// which is what makes the lossless PNG cache bit-exact.
struct Raster {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<float> data;

  Raster() = default;
  Raster(int c, int h, int w, float fill = 0.0f)
      : channels(c), height(h), width(w), data(static_cast<size_t>(c) * h * w, fill) {}

  size_t size() const { return data.size(); }
  bool same_shape(const Raster& o) const {
    return channels == o.channels && height == o.height && width == o.width;
  }

  float& at(int c, int y, int x) {
    return data[(static_cast<size_t>(c) * height + y) * width + x];
  }
  float at(int c, int y, int x) const {
    return data[(static_cast<size_t>(c) * height + y) * width + x];
  }

  std::string shape_str() const {
    return std::to_string(channels) + "x" + std::to_string(height) + "x" +
           std::to_string(width);
  }
};

inline uint8_t float_to_u8(float v) {
  if (v <= 0.0f) return 0;
  if (v >= 1.0f) return 255;
  return static_cast<uint8_t>(v * 255.0f + 0.5f);
}

inline float u8_to_float(uint8_t v) { return static_cast<float>(v) / 255.0f; }

// Quantized 8-bit copy (CHW order preserved).
std::vector<uint8_t> raster_to_u8(const Raster& r);
Raster raster_from_u8(const std::vector<uint8_t>& bytes, int c, int h, int w);

// Snaps every value to the 8-bit grid: v -> round(v*255)/255.
Raster quantize_to_grid(const Raster& r);
bool is_grid_aligned(const Raster& r);

bool in_unit_range(const Raster& r);
void require_unit_range(const Raster& r, const std::string& what);

bool bit_equal(const Raster& a, const Raster& b);

// FNV-1a 64 over dimensions plus quantized content; hex-encoded. Used as the
// translation-cache sample key.
std::string content_key(const Raster& r);

}  // namespace cyclemix
